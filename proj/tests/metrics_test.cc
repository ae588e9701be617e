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

#include "punctseg/metrics.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "oracles/sign_flip_oracle.h"
#include "punctseg/error.h"

namespace punctseg {
namespace {

using Labels = std::vector<PunctLabel>;
using Idx = std::vector<std::size_t>;
constexpr PunctLabel N = PunctLabel::kNone;
constexpr PunctLabel P = PunctLabel::kPeriod;
constexpr PunctLabel C = PunctLabel::kComma;

ErrorCode error_of(auto fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kIo;
}

TEST(ConfusionTest, SmallExample) {
  const ConfusionMatrix cm = confusion(Labels{P, N}, Labels{C, N});
  EXPECT_EQ(cm.at(P, C), 1u);
  EXPECT_EQ(cm.at(N, N), 1u);
  EXPECT_EQ(cm.total(), 2u);
  EXPECT_EQ(error_of([] { confusion(Labels{P}, Labels{}); }), ErrorCode::kLengthMismatch);
}

TEST(ConfusionTest, MatchesCountingOracle) {
  std::mt19937_64 rng(2);
  Labels gold(1000), pred(1000);
  std::array<std::array<int, 6>, 6> expected{};
  for (int i = 0; i < 1000; ++i) {
    gold[i] = label_at(rng() % 6);
    pred[i] = label_at(rng() % 6);
    ++expected[index_of(gold[i])][index_of(pred[i])];
  }
  const ConfusionMatrix cm = confusion(gold, pred);
  for (std::size_t g = 0; g < 6; ++g) {
    for (std::size_t p = 0; p < 6; ++p) {
      EXPECT_EQ(cm.at(label_at(g), label_at(p)), static_cast<std::uint64_t>(expected[g][p]));
    }
  }
}

TEST(F1Test, PublishedRow) {
  EXPECT_NEAR(f1_score(0.960450, 0.962452), 0.961450, 1e-4);
  EXPECT_EQ(f1_score(0, 0), 0.0);
}

TEST(ReportTest, DiagonalIsPerfect) {
  const Labels l = {N, P, C, N, PunctLabel::kQuestion};
  const EvalReport r = report(confusion(l, l));
  EXPECT_EQ(r.accuracy, 1.0);
  EXPECT_EQ(r.micro_f1, 1.0);
  EXPECT_EQ(r.of(P).f1, 1.0);
  EXPECT_TRUE(r.any_undefined);  // COLON and DASH never occur
  EXPECT_EQ(error_of([] { report(ConfusionMatrix{}); }), ErrorCode::kEmptyMatrix);
}

TEST(ReportTest, MacroIncludesNone) {
  ConfusionMatrix cm;
  cm.add(N, N, 8);
  cm.add(P, P, 1);
  cm.add(P, N, 1);
  const EvalReport r = report(cm);
  double sum = 0;
  for (const auto& m : r.per_class) sum += m.f1;
  EXPECT_DOUBLE_EQ(r.macro_f1, sum / 6);
  EXPECT_DOUBLE_EQ(r.of(N).precision, 8.0 / 9.0);
  EXPECT_DOUBLE_EQ(r.of(P).recall, 0.5);
  EXPECT_DOUBLE_EQ(r.weighted_recall, (8.0 * 1.0 + 2.0 * 0.5) / 10.0);
}

TEST(ReportTest, LabelPermutationInvariance) {
  std::mt19937_64 rng(4);
  Labels gold(500), pred(500);
  for (int i = 0; i < 500; ++i) {
    gold[i] = label_at(rng() % 6);
    pred[i] = rng() % 3 ? gold[i] : label_at(rng() % 6);
  }
  const std::array<std::size_t, 6> perm = {3, 5, 0, 1, 4, 2};
  Labels g2, p2;
  for (int i = 0; i < 500; ++i) {
    g2.push_back(label_at(perm[index_of(gold[i])]));
    p2.push_back(label_at(perm[index_of(pred[i])]));
  }
  const EvalReport a = report(confusion(gold, pred));
  const EvalReport b = report(confusion(g2, p2));
  EXPECT_EQ(a.accuracy, b.accuracy);
  EXPECT_NEAR(a.macro_f1, b.macro_f1, 1e-15);
}

TEST(ReportTest, FormatsAreStable) {
  ConfusionMatrix cm;
  cm.add(N, N, 3);
  cm.add(P, P, 1);
  const std::string tsv = format_report_tsv(report(cm));
  EXPECT_EQ(tsv.substr(0, tsv.find('\n')), "class\tprecision\trecall\tf1\tsupport");
  EXPECT_NE(tsv.find("\n.\t1.000000\t1.000000\t1.000000\t1\n"), std::string::npos);
  const std::string conf = format_confusion_tsv(cm);
  EXPECT_EQ(conf.substr(0, conf.find('\n')), "gold\\pred\t0\t.\t,\t?\t-\t:");
  EXPECT_NE(format_report_text(report(cm)).find("macro avg"), std::string::npos);
}

TEST(BoundaryScoreTest, Examples) {
  BoundaryScore s = boundary_score(Idx{4, 9}, Idx{4, 11}, 20);
  EXPECT_EQ(s.true_positives, 1u);
  EXPECT_EQ(s.false_positives, 1u);
  EXPECT_EQ(s.false_negatives, 1u);
  EXPECT_DOUBLE_EQ(s.f1, 0.5);
  s = boundary_score(Idx{1, 2}, Idx{1, 2}, 3);
  EXPECT_EQ(s.f1, 1.0);
  s = boundary_score(Idx{1}, Idx{}, 3);
  EXPECT_EQ(s.precision, 0.0);
  EXPECT_EQ(s.recall, 0.0);
  EXPECT_EQ(s.f1, 0.0);
  EXPECT_EQ(error_of([] { boundary_score(Idx{3}, Idx{}, 3); }), ErrorCode::kOutOfRange);
}

TEST(BoundaryScoreTest, SwapExchangesPrecisionAndRecall) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 200; ++t) {
    Idx g, p;
    for (std::size_t i = 0; i < 40; ++i) {
      if (rng() % 4 == 0) g.push_back(i);
      if (rng() % 4 == 0) p.push_back(i);
    }
    const BoundaryScore a = boundary_score(g, p, 40);
    const BoundaryScore b = boundary_score(p, g, 40);
    EXPECT_EQ(a.precision, b.recall);
    EXPECT_EQ(a.recall, b.precision);
    EXPECT_EQ(a.f1, b.f1);
  }
}

TEST(BoundariesOfTest, UsesSegmenterSet) {
  const Labels l = {N, P, PunctLabel::kQuestion, C, P};
  EXPECT_EQ(boundaries_of(l, LabelSet{P}), (Idx{1, 4}));
  EXPECT_EQ(boundaries_of(l, LabelSet{P, PunctLabel::kQuestion}), (Idx{1, 2, 4}));
}

SeppDocument sentences(std::size_t n) {
  SeppDocument d;
  for (std::size_t i = 0; i < n; ++i) {
    d.tokens.push_back({"a", false, N});
    d.tokens.push_back({"b" + std::to_string(i), true, P});
  }
  return d;
}

TEST(SplitTestfilesTest, BlocksAndRemainder) {
  const auto files = split_testfiles(sentences(3500), 1000);
  ASSERT_EQ(files.size(), 3u);
  EXPECT_EQ(count_sentences(files[2]), 1000u);
  EXPECT_EQ(files[1].tokens.front().word, "a");
  EXPECT_EQ(files[1].tokens[1].word, "b1000");
  EXPECT_EQ(split_testfiles(sentences(1000), 1000).size(), 1u);
  EXPECT_EQ(error_of([] { split_testfiles(sentences(999), 1000); }), ErrorCode::kTooShort);
}

TEST(SummarizeTest, CiRanks) {
  EXPECT_EQ(ci_low_rank(10000), 251u);
  EXPECT_EQ(ci_high_rank(10000), 9750u);
  EXPECT_EQ(ci_low_rank(1000), 26u);
  EXPECT_EQ(ci_high_rank(1000), 975u);
  EXPECT_EQ(ci_low_rank(1), 1u);
  EXPECT_EQ(ci_high_rank(1), 1u);
  EXPECT_EQ(ci_high_rank(41), 40u);
}

TEST(SummarizeTest, SingleScore) {
  const std::vector<double> one = {0.5};
  const DistributionSummary s = summarize(one);
  EXPECT_EQ(s.median, 0.5);
  EXPECT_EQ(s.average, 0.5);
  EXPECT_EQ(s.stddev, 0.0);
  EXPECT_EQ(s.ci_low, 0.5);
  EXPECT_EQ(s.ci_high, 0.5);
  EXPECT_EQ(error_of([] { summarize(std::vector<double>{}); }), ErrorCode::kEmpty);
}

TEST(SummarizeTest, MatchesSortAndIndexOracle) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<double> scores(1000);
  for (double& x : scores) x = u(rng);
  std::vector<double> sorted = scores;
  std::sort(sorted.begin(), sorted.end());
  double mean = 0;
  for (double x : scores) mean += x;
  mean /= 1000;
  double ss = 0;
  for (double x : scores) ss += (x - mean) * (x - mean);

  const DistributionSummary s = summarize(scores);
  EXPECT_EQ(s.median, (sorted[499] + sorted[500]) / 2);
  EXPECT_NEAR(s.average, mean, 1e-12);
  EXPECT_NEAR(s.stddev, std::sqrt(ss / 1000), 1e-12);
  EXPECT_NEAR(summarize(scores, StdDevKind::kSample).stddev, std::sqrt(ss / 999), 1e-12);
  EXPECT_EQ(s.ci_low, sorted[25]);
  EXPECT_EQ(s.ci_high, sorted[974]);
  EXPECT_LE(s.ci_low, s.median);
  EXPECT_LE(s.median, s.ci_high);

  std::shuffle(scores.begin(), scores.end(), rng);
  const DistributionSummary t = summarize(scores);
  EXPECT_EQ(t.median, s.median);
  EXPECT_EQ(t.ci_low, s.ci_low);
  EXPECT_NEAR(t.average, s.average, 1e-12);
}

TEST(SignificanceTest, IdenticalScoresGiveOne) {
  const std::vector<double> a = {0.1, 0.4, 0.3, 0.9};
  EXPECT_EQ(paired_significance(a, a), 1.0);
  PermutationTestOptions ex;
  ex.exhaustive = true;
  EXPECT_EQ(paired_significance(a, a, ex), 1.0);
}

TEST(SignificanceTest, ConstantShiftExhaustive) {
  std::vector<double> b(10), a(10);
  for (int i = 0; i < 10; ++i) {
    b[i] = 0.05 * i;
    a[i] = b[i] + 1.0;
  }
  PermutationTestOptions ex;
  ex.exhaustive = true;
  EXPECT_DOUBLE_EQ(paired_significance(a, b, ex), 2.0 / 1024.0);
}

TEST(SignificanceTest, ThreeFileExample) {
  const std::vector<double> a = {0.6, 0.4, 0.5};
  const std::vector<double> b = {0.5, 0.5, 0.5};
  PermutationTestOptions ex;
  ex.exhaustive = true;
  const double p = paired_significance(a, b, ex);
  EXPECT_EQ(p, oracle::brute_force_sign_flip(a, b, kStatisticTolerance));
  EXPECT_EQ(p, 1.0);  // every pattern has |mean| >= 0
}

TEST(SignificanceTest, SampledIsDeterministicAndClose) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<double> a(12), b(12);
  for (int i = 0; i < 12; ++i) {
    a[i] = u(rng);
    b[i] = a[i] - 0.1 + 0.3 * u(rng);
  }
  PermutationTestOptions opt;
  opt.permutations = 20000;
  opt.seed = 3;
  const double p1 = paired_significance(a, b, opt);
  EXPECT_EQ(p1, paired_significance(a, b, opt));
  const double exact = oracle::brute_force_sign_flip(a, b, kStatisticTolerance);
  EXPECT_NEAR(p1, exact, 0.015);
}

TEST(SignificanceTest, Errors) {
  EXPECT_EQ(error_of([] {
              paired_significance(std::vector<double>{1, 2}, std::vector<double>{1});
            }),
            ErrorCode::kLengthMismatch);
  EXPECT_EQ(error_of([] {
              paired_significance(std::vector<double>{1}, std::vector<double>{1});
            }),
            ErrorCode::kTooShort);
}

}  // namespace
}  // namespace punctseg
