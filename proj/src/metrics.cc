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

#include "punctseg/error.h"
#include "punctseg/random.h"

namespace punctseg {

std::uint64_t ConfusionMatrix::total() const {
  std::uint64_t t = 0;
  for (const auto& row : counts_) {
    for (std::uint64_t c : row) t += c;
  }
  return t;
}

std::uint64_t ConfusionMatrix::gold_count(PunctLabel gold) const {
  std::uint64_t t = 0;
  for (std::uint64_t c : counts_[index_of(gold)]) t += c;
  return t;
}

std::uint64_t ConfusionMatrix::predicted_count(PunctLabel pred) const {
  std::uint64_t t = 0;
  for (const auto& row : counts_) t += row[index_of(pred)];
  return t;
}

std::uint64_t ConfusionMatrix::correct() const {
  std::uint64_t t = 0;
  for (std::size_t l = 0; l < kNumLabels; ++l) t += counts_[l][l];
  return t;
}

ConfusionMatrix confusion(std::span<const PunctLabel> gold,
                          std::span<const PunctLabel> pred) {
  if (gold.size() != pred.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "gold has " + std::to_string(gold.size()) + " labels, prediction " +
                    std::to_string(pred.size()));
  }
  ConfusionMatrix cm;
  for (std::size_t i = 0; i < gold.size(); ++i) cm.add(gold[i], pred[i]);
  return cm;
}

double f1_score(double precision, double recall) {
  if (precision + recall <= 0.0) return 0.0;
  // The harmonic mean of equal values is that value; returning it directly
  // keeps micro F1 bit-identical to accuracy.
  if (precision == recall) return precision;
  return 2.0 * precision * recall / (precision + recall);
}

EvalReport report(const ConfusionMatrix& cm) {
  const std::uint64_t total = cm.total();
  if (total == 0) throw Error(ErrorCode::kEmptyMatrix, "confusion matrix is empty");
  EvalReport r;
  r.total = total;
  const double n = static_cast<double>(total);
  for (PunctLabel l : kTieOrder) {
    ClassMetrics& m = r.per_class[index_of(l)];
    const std::uint64_t tp = cm.at(l, l);
    const std::uint64_t predicted = cm.predicted_count(l);
    m.support = cm.gold_count(l);
    if (predicted > 0) {
      m.precision = static_cast<double>(tp) / static_cast<double>(predicted);
    } else {
      m.precision_undefined = true;
    }
    if (m.support > 0) {
      m.recall = static_cast<double>(tp) / static_cast<double>(m.support);
    } else {
      m.recall_undefined = true;
    }
    m.f1 = f1_score(m.precision, m.recall);
    r.any_undefined = r.any_undefined || m.precision_undefined || m.recall_undefined;

    r.macro_precision += m.precision;
    r.macro_recall += m.recall;
    r.macro_f1 += m.f1;
    const double w = static_cast<double>(m.support) / n;
    r.weighted_precision += w * m.precision;
    r.weighted_recall += w * m.recall;
    r.weighted_f1 += w * m.f1;
  }
  r.macro_precision /= kNumLabels;
  r.macro_recall /= kNumLabels;
  r.macro_f1 /= kNumLabels;

  r.accuracy = static_cast<double>(cm.correct()) / n;
  // Every token has exactly one gold and one predicted label, so micro
  // precision and micro recall are both correct / total.
  const double micro = static_cast<double>(cm.correct()) / n;
  r.micro_f1 = f1_score(micro, micro);
  return r;
}

BoundaryScore boundary_score(std::span<const std::size_t> gold,
                             std::span<const std::size_t> pred,
                             std::size_t stream_length) {
  auto normalized = [&](std::span<const std::size_t> in, const char* what) {
    std::vector<std::size_t> v(in.begin(), in.end());
    for (std::size_t i : v) {
      if (i >= stream_length) {
        throw Error(ErrorCode::kOutOfRange,
                    std::string(what) + " boundary " + std::to_string(i) +
                        " outside stream of " + std::to_string(stream_length) +
                        " words");
      }
    }
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  };
  const std::vector<std::size_t> g = normalized(gold, "gold");
  const std::vector<std::size_t> p = normalized(pred, "predicted");

  std::vector<std::size_t> common;
  std::set_intersection(g.begin(), g.end(), p.begin(), p.end(),
                        std::back_inserter(common));
  BoundaryScore s;
  s.true_positives = common.size();
  s.false_positives = p.size() - common.size();
  s.false_negatives = g.size() - common.size();
  if (!p.empty()) s.precision = static_cast<double>(common.size()) / p.size();
  if (!g.empty()) s.recall = static_cast<double>(common.size()) / g.size();
  s.f1 = f1_score(s.precision, s.recall);
  return s;
}

std::vector<std::size_t> boundaries_of(std::span<const PunctLabel> labels,
                                       LabelSet segmenters) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (segmenters.contains(labels[i])) out.push_back(i);
  }
  return out;
}

std::vector<SeppDocument> split_testfiles(const SeppDocument& corpus,
                                          std::size_t sentences_per_file) {
  if (sentences_per_file == 0) {
    throw Error(ErrorCode::kInvalidArgument, "block size must be positive");
  }
  const std::vector<SeppDocument> sentences = split_sentences(corpus);
  if (sentences.size() < sentences_per_file) {
    throw Error(ErrorCode::kTooShort,
                "corpus has " + std::to_string(sentences.size()) +
                    " sentences, block size is " +
                    std::to_string(sentences_per_file));
  }
  std::vector<SeppDocument> files(sentences.size() / sentences_per_file);
  for (std::size_t f = 0; f < files.size(); ++f) {
    for (std::size_t k = 0; k < sentences_per_file; ++k) {
      const auto& s = sentences[f * sentences_per_file + k].tokens;
      files[f].tokens.insert(files[f].tokens.end(), s.begin(), s.end());
    }
  }
  return files;
}

// Integer arithmetic, so n = 10000 lands exactly on ranks 251 and 9750.
std::size_t ci_low_rank(std::size_t n) { return (25 * n) / 1000 + 1; }
std::size_t ci_high_rank(std::size_t n) { return (975 * n + 999) / 1000; }

DistributionSummary summarize(std::span<const double> scores,
                              StdDevKind stddev) {
  if (scores.empty()) throw Error(ErrorCode::kEmpty, "no scores to summarize");
  std::vector<double> sorted(scores.begin(), scores.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();

  DistributionSummary s;
  s.n = n;
  s.median = n % 2 == 1 ? sorted[n / 2]
                        : (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0;
  double sum = 0;
  for (double v : sorted) sum += v;
  s.average = sum / static_cast<double>(n);
  double ss = 0;
  for (double v : sorted) ss += (v - s.average) * (v - s.average);
  if (stddev == StdDevKind::kPopulation) {
    s.stddev = std::sqrt(ss / static_cast<double>(n));
  } else {
    s.stddev = n > 1 ? std::sqrt(ss / static_cast<double>(n - 1)) : 0.0;
  }
  s.ci_low_rank = ci_low_rank(n);
  s.ci_high_rank = ci_high_rank(n);
  s.ci_low = sorted[s.ci_low_rank - 1];
  s.ci_high = sorted[s.ci_high_rank - 1];
  return s;
}

double paired_significance(std::span<const double> scores_a,
                           std::span<const double> scores_b,
                           const PermutationTestOptions& options) {
  if (scores_a.size() != scores_b.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "paired test needs equal-length score lists");
  }
  const std::size_t n = scores_a.size();
  if (n < 2) throw Error(ErrorCode::kTooShort, "paired test needs n >= 2");

  std::vector<double> diff(n);
  double abs_sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    diff[i] = scores_a[i] - scores_b[i];
    abs_sum += std::fabs(diff[i]);
  }
  const double dn = static_cast<double>(n);
  double observed = 0;
  for (double d : diff) observed += d;
  observed = std::fabs(observed / dn);
  const double threshold = observed - kStatisticTolerance * abs_sum / dn;

  if (options.exhaustive) {
    if (n > 30) {
      throw Error(ErrorCode::kInvalidArgument,
                  "exhaustive enumeration is limited to n <= 30");
    }
    const std::uint64_t patterns = std::uint64_t{1} << n;
    std::uint64_t hits = 0;
    for (std::uint64_t mask = 0; mask < patterns; ++mask) {
      double stat = 0;
      for (std::size_t i = 0; i < n; ++i) {
        stat += ((mask >> i) & 1) ? -diff[i] : diff[i];
      }
      if (std::fabs(stat / dn) >= threshold) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(patterns);
  }

  Rng rng(options.seed);
  std::uint64_t hits = 0;
  for (std::uint64_t p = 0; p < options.permutations; ++p) {
    double stat = 0;
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i % 64 == 0) bits = rng();
      stat += (bits & 1) ? -diff[i] : diff[i];
      bits >>= 1;
    }
    if (std::fabs(stat / dn) >= threshold) ++hits;
  }
  return static_cast<double>(1 + hits) /
         static_cast<double>(1 + options.permutations);
}

}  // namespace punctseg
