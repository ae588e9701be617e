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

#ifndef PUNCTSEG_METRICS_H_
#define PUNCTSEG_METRICS_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "punctseg/label.h"
#include "punctseg/sepp.h"

namespace punctseg {

// Rows are gold labels, columns predicted labels.
class ConfusionMatrix {
 public:
  std::uint64_t at(PunctLabel gold, PunctLabel pred) const {
    return counts_[index_of(gold)][index_of(pred)];
  }
  void add(PunctLabel gold, PunctLabel pred, std::uint64_t n = 1) {
    counts_[index_of(gold)][index_of(pred)] += n;
  }

  std::uint64_t total() const;
  std::uint64_t gold_count(PunctLabel gold) const;
  std::uint64_t predicted_count(PunctLabel pred) const;
  std::uint64_t correct() const;

  bool operator==(const ConfusionMatrix&) const = default;

 private:
  std::array<std::array<std::uint64_t, kNumLabels>, kNumLabels> counts_{};
};

// Throws LENGTH_MISMATCH.
ConfusionMatrix confusion(std::span<const PunctLabel> gold,
                          std::span<const PunctLabel> pred);

// Harmonic mean; 0 when both are 0.
double f1_score(double precision, double recall);

struct ClassMetrics {
  double precision = 0;
  double recall = 0;
  double f1 = 0;
  std::uint64_t support = 0;
  // Set when the denominator was zero and the value defaulted to 0.
  bool precision_undefined = false;
  bool recall_undefined = false;
};

struct EvalReport {
  std::array<ClassMetrics, kNumLabels> per_class;  // indexed by index_of()
  // Unweighted means over all six classes, NONE included.
  double macro_precision = 0;
  double macro_recall = 0;
  double macro_f1 = 0;
  // Support-weighted means.
  double weighted_precision = 0;
  double weighted_recall = 0;
  double weighted_f1 = 0;
  double micro_f1 = 0;
  double accuracy = 0;
  std::uint64_t total = 0;
  bool any_undefined = false;

  const ClassMetrics& of(PunctLabel l) const { return per_class[index_of(l)]; }
};

// Throws EMPTY_MATRIX.
EvalReport report(const ConfusionMatrix& cm);

struct BoundaryScore {
  std::uint64_t true_positives = 0;
  std::uint64_t false_positives = 0;
  std::uint64_t false_negatives = 0;
  double precision = 0;
  double recall = 0;
  double f1 = 0;
};

// Exact index match. Duplicate indices count once. Throws OUT_OF_RANGE for
// indices >= stream_length.
BoundaryScore boundary_score(std::span<const std::size_t> gold,
                             std::span<const std::size_t> pred,
                             std::size_t stream_length);

// Positions whose label belongs to the segmenter set.
std::vector<std::size_t> boundaries_of(std::span<const PunctLabel> labels,
                                       LabelSet segmenters);

// Consecutive blocks of exactly sentences_per_file sentences (see
// split_sentences); the remainder is dropped. Throws TOO_SHORT.
std::vector<SeppDocument> split_testfiles(const SeppDocument& corpus,
                                          std::size_t sentences_per_file);

enum class StdDevKind { kPopulation, kSample };

struct DistributionSummary {
  std::size_t n = 0;
  double median = 0;
  double average = 0;
  double stddev = 0;
  double ci_low = 0;
  double ci_high = 0;
  // 1-based ranks into the ascending scores.
  std::size_t ci_low_rank = 0;
  std::size_t ci_high_rank = 0;
};

// Empirical 95% interval: ranks floor(0.025 n) + 1 and ceil(0.975 n).
std::size_t ci_low_rank(std::size_t n);
std::size_t ci_high_rank(std::size_t n);

// Throws EMPTY.
DistributionSummary summarize(std::span<const double> scores,
                              StdDevKind stddev = StdDevKind::kPopulation);

struct PermutationTestOptions {
  std::uint64_t permutations = 10000;
  std::uint64_t seed = 0;
  // Enumerate all 2^n sign patterns instead of sampling (n <= 30).
  bool exhaustive = false;
};

// Two-sided paired sign-flip test on the per-file differences a - b with
// the mean difference as statistic. Sampled: p = (1 + hits) / (1 +
// permutations). Exhaustive: p = hits / 2^n, the identity pattern included.
// A permuted statistic is a hit when |stat| >= |observed| - tolerance, with
// tolerance = kStatisticTolerance * mean(|a - b|).
// Throws LENGTH_MISMATCH, or TOO_SHORT for n < 2.
inline constexpr double kStatisticTolerance = 1e-9;

double paired_significance(std::span<const double> scores_a,
                           std::span<const double> scores_b,
                           const PermutationTestOptions& options = {});

// ---------------------------------------------------------------------------
// Report formats

// Aligned text table: per class rows in the order 0 . , ? - :, then
// accuracy, macro avg and weighted avg.
std::string format_report_text(const EvalReport& r);
// class\tprecision\trecall\tf1\tsupport
std::string format_report_tsv(const EvalReport& r);
// Header row and column of label characters; rows are gold.
std::string format_confusion_tsv(const ConfusionMatrix& cm);
// precision\trecall\tf1\ttp\tfp\tfn
std::string format_boundary_tsv(const BoundaryScore& s);
// condition\tn\tmedian\taverage\tstddev\tci_lo\tci_hi
std::string format_summary_tsv(
    const std::vector<std::pair<std::string, DistributionSummary>>& rows);

std::string format_double(double v, int precision = 6);

}  // namespace punctseg

#endif  // PUNCTSEG_METRICS_H_
