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

#include "punctseg/segmenter.h"

#include <random>

#include "gtest/gtest.h"
#include "oracles/segment_oracle.h"
#include "punctseg/error.h"

namespace punctseg {
namespace {

using Words = std::vector<std::string>;
using Labels = std::vector<PunctLabel>;
constexpr PunctLabel N = PunctLabel::kNone;
constexpr PunctLabel P = PunctLabel::kPeriod;
constexpr PunctLabel C = PunctLabel::kComma;
constexpr PunctLabel Q = PunctLabel::kQuestion;

Words stream_of(std::size_t n) {
  Words w;
  for (std::size_t i = 0; i < n; ++i) w.push_back("w" + std::to_string(i));
  return w;
}

SegmenterConfig config(std::size_t w, std::size_t stride = 1) {
  SegmenterConfig c;
  c.window_words = w;
  c.stride = stride;
  return c;
}

FunctionClassifier constant(PunctLabel l) {
  return FunctionClassifier([l](WordSpan w) { return Labels(w.size(), l); });
}

VoteTable::Counts counts(std::initializer_list<std::pair<PunctLabel, std::uint32_t>> c) {
  VoteTable::Counts out{};
  for (auto [l, n] : c) out[index_of(l)] = n;
  return out;
}

TEST(WindowsTest, StartsAndLengths) {
  EXPECT_EQ(windows(5, config(3)),
            (std::vector<WindowSpan>{{0, 3}, {1, 3}, {2, 3}}));
  EXPECT_EQ(windows(2, config(200)), (std::vector<WindowSpan>{{0, 2}}));
  EXPECT_EQ(windows(1000, config(200)).size(), 801u);
  EXPECT_EQ(windows(10, config(4, 3)),
            (std::vector<WindowSpan>{{0, 4}, {3, 4}, {6, 4}}));
  EXPECT_THROW(windows(0, config(3)), Error);
}

TEST(AccumulateVotesTest, SingleWindow) {
  FunctionClassifier clf([](WordSpan) { return Labels{N, N, P}; });
  const VoteTable t = accumulate_votes(stream_of(3), clf, config(3));
  EXPECT_EQ(t.counts(2)[index_of(P)], 1u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(t.coverage(i), 1u);
}

TEST(AccumulateVotesTest, CoverageFourWordsWindowThree) {
  const auto clf = constant(N);
  const VoteTable t = accumulate_votes(stream_of(4), clf, config(3));
  EXPECT_EQ(t.coverage(0), 1u);
  EXPECT_EQ(t.coverage(1), 2u);
  EXPECT_EQ(t.coverage(2), 2u);
  EXPECT_EQ(t.coverage(3), 1u);
}

TEST(AccumulateVotesTest, MiddleWordsSeeTwoHundredWindows) {
  const auto clf = constant(N);
  const VoteTable t = accumulate_votes(stream_of(1000), clf, SegmenterConfig{});
  EXPECT_EQ(t.coverage(500), 200u);
  EXPECT_EQ(t.coverage(0), 1u);
  EXPECT_EQ(t.coverage(999), 1u);
  std::uint32_t max_cov = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::uint32_t sum = 0;
    for (auto c : t.counts(i)) sum += c;
    EXPECT_EQ(sum, t.coverage(i));
    max_cov = std::max(max_cov, t.coverage(i));
  }
  EXPECT_EQ(max_cov, 200u);
}

TEST(AccumulateVotesTest, CoverageBoundWithStride) {
  const auto clf = constant(N);
  for (std::size_t stride : {1u, 2u, 3u, 7u}) {
    const VoteTable t = accumulate_votes(stream_of(50), clf, config(10, stride));
    for (std::size_t i = 0; i < t.size(); ++i) {
      EXPECT_LE(t.coverage(i), (10 + stride - 1) / stride);
    }
  }
}

TEST(AccumulateVotesTest, ThreadsGiveSameTable) {
  FunctionClassifier clf([](WordSpan w) {
    Labels out;
    for (const auto& s : w) out.push_back(s.back() % 3 == 0 ? P : s.back() % 3 == 1 ? C : N);
    return out;
  });
  const Words s = stream_of(300);
  const VoteTable one = accumulate_votes(s, clf, config(20), 1);
  EXPECT_EQ(accumulate_votes(s, clf, config(20), 4), one);
  EXPECT_EQ(accumulate_votes(s, clf, config(20), 1), one);
}

TEST(AccumulateVotesTest, ChunksRespectClassifierLimit) {
  std::size_t largest = 0;
  std::size_t calls = 0;
  FunctionClassifier clf(
      [&](WordSpan w) {
        largest = std::max(largest, w.size());
        ++calls;
        return Labels(w.size(), N);
      },
      "capped", 4);
  const VoteTable t = accumulate_votes(stream_of(10), clf, config(10));
  EXPECT_EQ(largest, 4u);
  EXPECT_EQ(calls, 3u);
  EXPECT_EQ(t.coverage(9), 1u);
}

TEST(AccumulateVotesTest, ErrorsCarryWindowStart) {
  FunctionClassifier clf([](WordSpan w) {
    if (w.front() == "w2") throw Error(ErrorCode::kTimeout, "slow");
    return Labels(w.size(), N);
  });
  try {
    accumulate_votes(stream_of(5), clf, config(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTimeout);
    EXPECT_NE(std::string(e.what()).find("window starting at word 2"), std::string::npos);
  }
}

TEST(DecideTest, ThresholdExamples) {
  SegmenterConfig cfg;
  cfg.segmenters = LabelSet{P};
  EXPECT_EQ(decide_label(counts({{P, 2}, {N, 3}}), 5, cfg), P);
  cfg.theta = 1.0;
  EXPECT_EQ(decide_label(counts({{P, 5}}), 5, cfg), N);
  cfg.theta = 0.4;
  EXPECT_EQ(decide_label(counts({{P, 2}, {N, 3}}), 5, cfg), N);
}

TEST(DecideTest, TieFollowsLabelOrder) {
  SegmenterConfig cfg;
  EXPECT_EQ(decide_label(counts({{P, 1}, {Q, 1}}), 2, cfg), P);
  EXPECT_EQ(decide_label(counts({{PunctLabel::kDash, 1}, {C, 1}}), 2, cfg), C);
  EXPECT_EQ(decide_label(counts({{C, 1}, {Q, 2}}), 3, cfg), Q);
  EXPECT_EQ(decide_label(VoteTable::Counts{}, 0, cfg), N);
}

TEST(DecideTest, PooledModeSumsSegmenters) {
  SegmenterConfig cfg;
  cfg.theta = 0.5;
  cfg.pooling = Pooling::kPooled;
  const auto c = counts({{P, 2}, {Q, 2}, {N, 1}});
  EXPECT_EQ(decide_label(c, 5, cfg), P);
  cfg.pooling = Pooling::kPerClass;
  EXPECT_EQ(decide_label(c, 5, cfg), N);
  cfg.pooling = Pooling::kPooled;
  EXPECT_EQ(decide_label(counts({{P, 1}, {Q, 2}, {N, 2}}), 5, cfg), Q);
  EXPECT_EQ(decide_label(counts({{C, 4}, {P, 1}}), 5, cfg), C);
}

TEST(SegmentTest, ConstantNoneIsOneOpenSegment) {
  const auto clf = constant(N);
  const SegmentedText t = segment(stream_of(9), clf, config(4));
  ASSERT_EQ(t.segments.size(), 1u);
  EXPECT_TRUE(t.segments[0].open);
  EXPECT_TRUE(t.decision.boundaries.empty());
}

TEST(SegmentTest, EveryThirdWord) {
  FunctionClassifier clf([](WordSpan w) {
    Labels out(w.size(), N);
    for (std::size_t i = 2; i < w.size(); i += 3) out[i] = P;
    return out;
  });
  const Words s = stream_of(10);
  const SegmentedText t = segment(s, clf, config(200));
  EXPECT_EQ(t.decision.boundaries, (std::vector<std::size_t>{2, 5, 8}));
  ASSERT_EQ(t.segments.size(), 4u);
  EXPECT_FALSE(t.segments[2].open);
  EXPECT_EQ(t.segments[2].terminal(), P);
  EXPECT_TRUE(t.segments[3].open);
  EXPECT_EQ(flatten(t), s);
}

TEST(SegmentTest, FormatAttachesMarks) {
  FunctionClassifier clf([](WordSpan w) {
    Labels out(w.size(), N);
    out[0] = C;
    out[1] = Q;
    return out;
  });
  const Words s{"ja", "echt", "nee"};
  const SegmentedText t = segment(s, clf, config(200));
  EXPECT_EQ(format_segments(t), "ja, echt?\nnee\n");
  const SeppDocument d = to_sepp(s, t.decision);
  EXPECT_EQ(d.tokens[1], (LabeledToken{"echt", true, Q}));
  EXPECT_EQ(d.tokens[0], (LabeledToken{"ja", false, C}));
}

TEST(SegmentTest, MatchesOracleOnRandomCases) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    Words s(1 + rng() % 25);
    for (auto& w : s) w = std::string(1, static_cast<char>('a' + rng() % 3));
    const std::uint64_t salt = rng();
    FunctionClassifier clf([salt](WordSpan w) {
      Labels out;
      std::uint64_t h = salt;
      for (const auto& x : w) h = h * 1099511628211ULL ^ static_cast<unsigned char>(x[0]);
      for (std::size_t i = 0; i < w.size(); ++i) {
        out.push_back(label_at(((h >> (i % 50)) + i * 7) % kNumLabels));
      }
      return out;
    });
    const std::size_t w = 1 + rng() % 6;
    SegmenterConfig cfg = config(w, 1 + rng() % std::min<std::size_t>(3, w));
    cfg.theta = static_cast<double>(rng() % 5) / 4.0;
    cfg.pooling = rng() % 2 ? Pooling::kPooled : Pooling::kPerClass;
    const auto expected = oracle::brute_force_segment(s, clf, cfg);
    const SegmentedText got = segment(s, clf, cfg);
    EXPECT_EQ(got.decision.labels, expected.labels) << trial;
    EXPECT_EQ(got.decision.boundaries, expected.boundaries) << trial;
  }
}

TEST(SegmenterConfigTest, Validation) {
  SegmenterConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.window_words = 0;
  EXPECT_THROW(cfg.validate(), Error);
  cfg = SegmenterConfig{};
  cfg.theta = 1.5;
  EXPECT_THROW(cfg.validate(), Error);
  cfg = SegmenterConfig{};
  cfg.segmenters = LabelSet{};
  EXPECT_THROW(cfg.validate(), Error);
  cfg = SegmenterConfig{};
  cfg.segmenters = LabelSet{N};
  EXPECT_THROW(cfg.validate(), Error);
  EXPECT_EQ(pooling_from_string("pooled"), Pooling::kPooled);
  EXPECT_FALSE(pooling_from_string("sum").has_value());
}

}  // namespace
}  // namespace punctseg
