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

#ifndef PUNCTSEG_SEGMENTER_H_
#define PUNCTSEG_SEGMENTER_H_

// Sliding-window punctuation and sentence segmentation.
//
// A window of W words slides over the stream with a fixed stride. Every
// window is classified once, and each word collects one vote from every
// window that covers it. A mark c is accepted at word i when the share of
// covering windows that predicted it, counts[i][c] / coverage[i], is
// strictly greater than theta. Accepted marks from the segmenter set S end
// a segment after the word.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "punctseg/classifier.h"
#include "punctseg/label.h"
#include "punctseg/sepp.h"

namespace punctseg {

enum class Pooling {
  // Each mark is tested against theta on its own.
  kPerClass,
  // The boundary test sums the vote shares of all of S; the winning member
  // of S becomes the label. Marks outside S are still tested one by one.
  kPooled,
};

std::string to_string(Pooling pooling);
std::optional<Pooling> pooling_from_string(std::string_view s);

struct SegmenterConfig {
  std::size_t window_words = 200;
  std::size_t stride = 1;
  double theta = 0.1;
  LabelSet segmenters{PunctLabel::kPeriod, PunctLabel::kQuestion};
  Pooling pooling = Pooling::kPerClass;
  // A classifier call never carries more words than this, since every word
  // is at least one model token.
  std::size_t chunk_token_budget = 512;

  // Throws INVALID_ARGUMENT when an invariant does not hold.
  void validate() const;
};

struct WindowSpan {
  std::size_t start = 0;
  std::size_t length = 0;

  bool operator==(const WindowSpan&) const = default;
};

// Starts 0, stride, 2*stride, ... up to max(0, n - W); each window holds
// min(W, n) words. Throws EMPTY_STREAM for n = 0. With stride > 1 the tail
// words past the last full stride may stay uncovered.
std::vector<WindowSpan> windows(std::size_t stream_length,
                                const SegmenterConfig& config);

class VoteTable {
 public:
  using Counts = std::array<std::uint32_t, kNumLabels>;

  VoteTable() = default;
  explicit VoteTable(std::size_t n) : counts_(n), coverage_(n, 0) {}

  std::size_t size() const { return counts_.size(); }
  const Counts& counts(std::size_t i) const { return counts_[i]; }
  std::uint32_t coverage(std::size_t i) const { return coverage_[i]; }

  void add_vote(std::size_t i, PunctLabel label) {
    ++counts_[i][index_of(label)];
    ++coverage_[i];
  }
  void set(std::size_t i, const Counts& counts);

  // Partial tables over the same stream merge by addition.
  VoteTable& operator+=(const VoteTable& other);
  bool operator==(const VoteTable&) const = default;

 private:
  std::vector<Counts> counts_;
  std::vector<std::uint32_t> coverage_;
};

// Classifies every window (in chunks of at most
// min(W, classifier.max_window_words(), chunk_token_budget) words) and
// tallies the votes. `threads` > 1 spreads windows over worker threads; the
// result does not depend on it. Classifier errors are rethrown with the
// window start appended.
VoteTable accumulate_votes(WordSpan stream, const Classifier& classifier,
                           const SegmenterConfig& config,
                           unsigned threads = 1);

// The accepted mark for one word.
PunctLabel decide_label(const VoteTable::Counts& counts, std::uint32_t coverage,
                        const SegmenterConfig& config);

struct Decision {
  std::vector<PunctLabel> labels;
  // Ascending word indices whose accepted mark is in S.
  std::vector<std::size_t> boundaries;
};

Decision decide(const VoteTable& votes, const SegmenterConfig& config);

struct Segment {
  std::vector<std::string> words;
  std::vector<PunctLabel> labels;
  // True for a trailing segment not closed by a mark from S.
  bool open = false;

  PunctLabel terminal() const {
    return labels.empty() ? PunctLabel::kNone : labels.back();
  }
};

struct SegmentedText {
  std::vector<Segment> segments;
  Decision decision;
};

SegmentedText assemble(WordSpan stream, const Decision& decision);

SegmentedText segment(WordSpan stream, const Classifier& classifier,
                      const SegmenterConfig& config, unsigned threads = 1);

// One segment per line; accepted marks are glued to the word they follow.
std::string format_segments(const SegmentedText& text);

std::vector<std::string> flatten(const SegmentedText& text);

// Predicted labels as a SEPP document; eos marks the segment boundaries.
SeppDocument to_sepp(WordSpan stream, const Decision& decision);

}  // namespace punctseg

#endif  // PUNCTSEG_SEGMENTER_H_
