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

#ifndef PUNCTSEG_CLASSIFIER_H_
#define PUNCTSEG_CLASSIFIER_H_

#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "punctseg/label.h"

namespace punctseg {

using WordSpan = std::span<const std::string>;

// Per-word punctuation classifier. For every word of the window it returns
// the mark that follows the word: the output has the window's length, and
// the same window always yields the same labels. classify may be called
// concurrently.
class Classifier {
 public:
  static constexpr std::size_t kUnlimited =
      std::numeric_limits<std::size_t>::max();

  virtual ~Classifier() = default;

  virtual std::vector<PunctLabel> classify(WordSpan window) const = 0;
  virtual std::string name() const = 0;
  // Longest window accepted by one classify call.
  virtual std::size_t max_window_words() const { return kUnlimited; }
};

// Wraps a callable; handy for test doubles.
class FunctionClassifier : public Classifier {
 public:
  using Fn = std::function<std::vector<PunctLabel>(WordSpan)>;

  explicit FunctionClassifier(Fn fn, std::string name = "function",
                              std::size_t max_words = kUnlimited)
      : fn_(std::move(fn)), name_(std::move(name)), max_words_(max_words) {}

  std::vector<PunctLabel> classify(WordSpan window) const override {
    return fn_(window);
  }
  std::string name() const override { return name_; }
  std::size_t max_window_words() const override { return max_words_; }

 private:
  Fn fn_;
  std::string name_;
  std::size_t max_words_;
};

// Classifies consecutive chunks of at most chunk_words words and
// concatenates the results. Throws LENGTH_MISMATCH when the classifier
// breaks the length contract.
std::vector<PunctLabel> classify_in_chunks(const Classifier& classifier,
                                           WordSpan words,
                                           std::size_t chunk_words);

}  // namespace punctseg

#endif  // PUNCTSEG_CLASSIFIER_H_
