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

#include <algorithm>
#include <exception>
#include <thread>

#include "punctseg/error.h"

namespace punctseg {

std::string to_string(Pooling pooling) {
  return pooling == Pooling::kPooled ? "pooled" : "per-class";
}

std::optional<Pooling> pooling_from_string(std::string_view s) {
  if (s == "per-class" || s == "per_class" || s == "PER_CLASS") {
    return Pooling::kPerClass;
  }
  if (s == "pooled" || s == "POOLED") return Pooling::kPooled;
  return std::nullopt;
}

void SegmenterConfig::validate() const {
  if (window_words == 0) {
    throw Error(ErrorCode::kInvalidArgument, "window size must be positive");
  }
  if (stride == 0 || stride > window_words) {
    throw Error(ErrorCode::kInvalidArgument,
                "stride must be in [1, window size]");
  }
  if (!(theta >= 0.0 && theta <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "theta must be in [0, 1]");
  }
  if (segmenters.empty() || segmenters.contains(PunctLabel::kNone)) {
    throw Error(ErrorCode::kInvalidArgument,
                "segmenter set must be a non-empty set of marks");
  }
  if (chunk_token_budget == 0) {
    throw Error(ErrorCode::kInvalidArgument, "token budget must be positive");
  }
}

std::vector<WindowSpan> windows(std::size_t stream_length,
                                const SegmenterConfig& config) {
  config.validate();
  if (stream_length == 0) {
    throw Error(ErrorCode::kEmptyStream, "no words to segment");
  }
  const std::size_t length = std::min(config.window_words, stream_length);
  const std::size_t last_start = stream_length - length;
  std::vector<WindowSpan> out;
  out.reserve(last_start / config.stride + 1);
  for (std::size_t s = 0; s <= last_start; s += config.stride) {
    out.push_back({s, length});
  }
  return out;
}

void VoteTable::set(std::size_t i, const Counts& counts) {
  counts_[i] = counts;
  std::uint32_t total = 0;
  for (std::uint32_t c : counts) total += c;
  coverage_[i] = total;
}

VoteTable& VoteTable::operator+=(const VoteTable& other) {
  if (other.size() != size()) {
    throw Error(ErrorCode::kLengthMismatch, "vote tables cover different streams");
  }
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t l = 0; l < kNumLabels; ++l) counts_[i][l] += other.counts_[i][l];
    coverage_[i] += other.coverage_[i];
  }
  return *this;
}

namespace {

void vote_range(WordSpan stream, const Classifier& classifier,
                const std::vector<WindowSpan>& spans, std::size_t begin,
                std::size_t end, std::size_t chunk, VoteTable& table) {
  for (std::size_t w = begin; w < end; ++w) {
    const WindowSpan& span = spans[w];
    std::vector<PunctLabel> labels;
    try {
      labels = classify_in_chunks(
          classifier, stream.subspan(span.start, span.length), chunk);
    } catch (const Error& e) {
      throw Error(e.code(), e.message() + " (window starting at word " +
                                std::to_string(span.start) + ")");
    }
    for (std::size_t k = 0; k < labels.size(); ++k) {
      table.add_vote(span.start + k, labels[k]);
    }
  }
}

}  // namespace

VoteTable accumulate_votes(WordSpan stream, const Classifier& classifier,
                           const SegmenterConfig& config, unsigned threads) {
  const std::vector<WindowSpan> spans = windows(stream.size(), config);
  const std::size_t chunk = std::min({config.window_words,
                                      classifier.max_window_words(),
                                      config.chunk_token_budget});
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(threads, spans.size()));
  if (workers == 1) {
    VoteTable table(stream.size());
    vote_range(stream, classifier, spans, 0, spans.size(), chunk, table);
    return table;
  }

  std::vector<VoteTable> partial(workers, VoteTable(stream.size()));
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  const std::size_t per = (spans.size() + workers - 1) / workers;
  for (std::size_t t = 0; t < workers; ++t) {
    const std::size_t begin = std::min(spans.size(), t * per);
    const std::size_t end = std::min(spans.size(), begin + per);
    pool.emplace_back([&, t, begin, end] {
      try {
        vote_range(stream, classifier, spans, begin, end, chunk, partial[t]);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (std::thread& th : pool) th.join();
  // Ranges are ordered, so the first failing worker holds the earliest window.
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  VoteTable table = std::move(partial[0]);
  for (std::size_t t = 1; t < workers; ++t) table += partial[t];
  return table;
}

PunctLabel decide_label(const VoteTable::Counts& counts, std::uint32_t coverage,
                        const SegmenterConfig& config) {
  if (coverage == 0) return PunctLabel::kNone;
  const double cov = static_cast<double>(coverage);
  auto ratio = [&](PunctLabel l) {
    return static_cast<double>(counts[index_of(l)]) / cov;
  };

  // Highest ratio above theta among the labels `eligible` admits; the first
  // in tie order wins on equal ratios.
  auto best_above_theta = [&](auto eligible) {
    PunctLabel best = PunctLabel::kNone;
    double best_ratio = -1.0;
    for (PunctLabel l : kTieOrder) {
      if (l == PunctLabel::kNone || !eligible(l)) continue;
      const double r = ratio(l);
      if (r > config.theta && r > best_ratio) {
        best = l;
        best_ratio = r;
      }
    }
    return best;
  };

  if (config.pooling == Pooling::kPerClass) {
    return best_above_theta([](PunctLabel) { return true; });
  }

  std::uint32_t pooled_votes = 0;
  for (PunctLabel s : config.segmenters.members()) pooled_votes += counts[index_of(s)];
  if (static_cast<double>(pooled_votes) / cov > config.theta) {
    PunctLabel best = PunctLabel::kNone;
    double best_ratio = -1.0;
    for (PunctLabel s : config.segmenters.members()) {
      if (ratio(s) > best_ratio) {
        best = s;
        best_ratio = ratio(s);
      }
    }
    return best;
  }
  return best_above_theta(
      [&](PunctLabel l) { return !config.segmenters.contains(l); });
}

Decision decide(const VoteTable& votes, const SegmenterConfig& config) {
  Decision d;
  d.labels.resize(votes.size());
  for (std::size_t i = 0; i < votes.size(); ++i) {
    d.labels[i] = decide_label(votes.counts(i), votes.coverage(i), config);
    if (config.segmenters.contains(d.labels[i])) d.boundaries.push_back(i);
  }
  return d;
}

SegmentedText assemble(WordSpan stream, const Decision& decision) {
  if (decision.labels.size() != stream.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "decision covers " + std::to_string(decision.labels.size()) +
                    " words, stream has " + std::to_string(stream.size()));
  }
  SegmentedText text;
  text.decision = decision;
  Segment current;
  std::size_t next_boundary = 0;
  for (std::size_t i = 0; i < stream.size(); ++i) {
    current.words.push_back(stream[i]);
    current.labels.push_back(decision.labels[i]);
    if (next_boundary < decision.boundaries.size() &&
        decision.boundaries[next_boundary] == i) {
      ++next_boundary;
      text.segments.push_back(std::move(current));
      current = Segment{};
    }
  }
  if (!current.words.empty()) {
    current.open = true;
    text.segments.push_back(std::move(current));
  }
  return text;
}

SegmentedText segment(WordSpan stream, const Classifier& classifier,
                      const SegmenterConfig& config, unsigned threads) {
  const VoteTable votes = accumulate_votes(stream, classifier, config, threads);
  return assemble(stream, decide(votes, config));
}

std::string format_segments(const SegmentedText& text) {
  std::string out;
  for (const Segment& seg : text.segments) {
    for (std::size_t i = 0; i < seg.words.size(); ++i) {
      if (i > 0) out.push_back(' ');
      out += seg.words[i];
      if (seg.labels[i] != PunctLabel::kNone) out.push_back(to_char(seg.labels[i]));
    }
    out.push_back('\n');
  }
  return out;
}

std::vector<std::string> flatten(const SegmentedText& text) {
  std::vector<std::string> words;
  for (const Segment& seg : text.segments) {
    words.insert(words.end(), seg.words.begin(), seg.words.end());
  }
  return words;
}

SeppDocument to_sepp(WordSpan stream, const Decision& decision) {
  if (decision.labels.size() != stream.size()) {
    throw Error(ErrorCode::kLengthMismatch, "decision and stream differ in length");
  }
  SeppDocument doc;
  doc.tokens.reserve(stream.size());
  std::size_t next_boundary = 0;
  for (std::size_t i = 0; i < stream.size(); ++i) {
    bool boundary = false;
    if (next_boundary < decision.boundaries.size() &&
        decision.boundaries[next_boundary] == i) {
      boundary = true;
      ++next_boundary;
    }
    LabeledToken t{stream[i], boundary, decision.labels[i]};
    t.eos = derived_eos(t);
    doc.tokens.push_back(std::move(t));
  }
  return doc;
}

}  // namespace punctseg
