// Copyright 2026 The punctseg Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "punctseg/classifier.h"

#include <algorithm>
#include <random>

#include "gtest/gtest.h"
#include "punctseg/error.h"
#include "punctseg/reference_model.h"
#include "punctseg/replay_classifier.h"

namespace punctseg {
namespace {

using Words = std::vector<std::string>;
using Labels = std::vector<PunctLabel>;
constexpr PunctLabel N = PunctLabel::kNone;
constexpr PunctLabel P = PunctLabel::kPeriod;

SeppDocument abc_corpus(int sentences) {
  SeppDocument d;
  for (int i = 0; i < sentences; ++i) {
    d.tokens.push_back({"a", false, N});
    d.tokens.push_back({"b", false, N});
    d.tokens.push_back({"c", true, P});
  }
  return d;
}

TEST(ReferenceModelTest, SeparableCorpusIsLearned) {
  const SeppDocument train = abc_corpus(300);
  const LinearModel m = train_reference({train}, 5, 1);
  // Brute-force check over the training windows.
  const Words words = strip_labels(train);
  std::size_t correct = 0;
  for (std::size_t start = 0; start < words.size(); start += 200) {
    const std::size_t len = std::min<std::size_t>(200, words.size() - start);
    const Labels out = classify_reference(
        m, WordSpan(words).subspan(start, len));
    for (std::size_t j = 0; j < len; ++j) {
      correct += out[j] == train.tokens[start + j].label;
    }
  }
  EXPECT_EQ(correct, words.size());
  EXPECT_EQ(classify_reference(m, Words{"a", "b", "c"}), (Labels{N, N, P}));
}

TEST(ReferenceModelTest, ZeroEpochsPredictsNone) {
  const LinearModel m = train_reference({abc_corpus(3)}, 0, 0);
  EXPECT_TRUE(m.weights().empty());
  EXPECT_EQ(classify_reference(m, Words{"x", "y"}), (Labels{N, N}));
  EXPECT_EQ(classify_reference(m, Words{"x"}).size(), 1u);
}

TEST(ReferenceModelTest, Deterministic) {
  const auto docs = std::vector<SeppDocument>{abc_corpus(40)};
  EXPECT_EQ(train_reference(docs, 3, 9), train_reference(docs, 3, 9));
}

TEST(ReferenceModelTest, DocumentOrderDoesNotMatter) {
  SeppDocument other;
  for (const char* w : {"x", "y", "z"}) other.tokens.push_back({w, false, N});
  other.tokens.back() = {"z", false, PunctLabel::kComma};
  for (int i = 0; i < 10; ++i) other.tokens.push_back({"q" + std::to_string(i), i == 9, i == 9 ? P : N});
  const SeppDocument abc = abc_corpus(20);
  EXPECT_EQ(train_reference({abc, other}, 3, 4), train_reference({other, abc}, 3, 4));
}

TEST(ReferenceModelTest, Errors) {
  try {
    train_reference({}, 1, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyTrainingSet);
  }
  try {
    classify_reference(LinearModel{}, Words{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyWindow);
  }
}

TEST(ReferenceModelTest, TieOrderPrefersEarlierLabel) {
  LinearModel m;
  const auto feats = extract_features(Words{"w"}, 0);
  m.set_weight(feats[0], PunctLabel::kDash, 1.0);
  m.set_weight(feats[0], PunctLabel::kComma, 1.0);
  EXPECT_EQ(m.predict(feats), PunctLabel::kComma);
}

TEST(ReferenceModelTest, FeatureHashing) {
  // Published FNV-1a 64 test vectors.
  EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
  EXPECT_EQ(fnv1a64("foobar"), 0x85944171f73967e8ULL);
  EXPECT_EQ(word_shape("Gill"), word_shape("Copernicus"));
  EXPECT_NE(word_shape("1543"), word_shape("gill"));
  for (std::uint32_t f : extract_features(Words{"a", "b"}, 1)) {
    EXPECT_LT(f, kFeatureSpaceSize);
  }
}

TEST(ClassifierContractTest, LengthPreservedOnRandomWindows) {
  const LinearModel m = train_reference({abc_corpus(50)}, 2, 0);
  const ReferenceClassifier clf(std::make_shared<LinearModel>(m));
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    Words w(1 + rng() % 40);
    for (auto& s : w) s = std::string(1, static_cast<char>('a' + rng() % 4));
    EXPECT_EQ(clf.classify(w).size(), w.size());
  }
}

TEST(ClassifyInChunksTest, SplitsAndChecksLength) {
  std::vector<std::size_t> sizes;
  FunctionClassifier clf([&](WordSpan w) {
    sizes.push_back(w.size());
    return Labels(w.size(), P);
  });
  const Words words(7, "x");
  EXPECT_EQ(classify_in_chunks(clf, words, 3), Labels(7, P));
  EXPECT_EQ(sizes, (std::vector<std::size_t>{3, 3, 1}));

  FunctionClassifier broken([](WordSpan w) { return Labels(w.size() + 1, N); });
  try {
    classify_in_chunks(broken, words, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kLengthMismatch);
  }
}

TEST(ReplayClassifierTest, ReturnsRecordedLabels) {
  SeppDocument rec;
  rec.tokens = {{"a", false, N}, {"b", true, P}, {"a", false, PunctLabel::kComma}, {"c", false, N}};
  const ReplayClassifier clf(rec);
  EXPECT_EQ(clf.classify(Words{"b", "a"}), (Labels{P, PunctLabel::kComma}));
  EXPECT_EQ(clf.classify(Words{"a", "c"}), (Labels{PunctLabel::kComma, N}));
  EXPECT_EQ(clf.classify(Words{"a"}), (Labels{N}));
  EXPECT_THROW(clf.classify(Words{"c", "a"}), Error);
}

}  // namespace
}  // namespace punctseg
