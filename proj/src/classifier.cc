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

#include "punctseg/error.h"

namespace punctseg {

std::vector<PunctLabel> classify_in_chunks(const Classifier& classifier,
                                           WordSpan words,
                                           std::size_t chunk_words) {
  if (chunk_words == 0) {
    throw Error(ErrorCode::kInvalidArgument, "chunk size must be positive");
  }
  std::vector<PunctLabel> labels;
  labels.reserve(words.size());
  for (std::size_t start = 0; start < words.size(); start += chunk_words) {
    const std::size_t len = std::min(chunk_words, words.size() - start);
    std::vector<PunctLabel> part = classifier.classify(words.subspan(start, len));
    if (part.size() != len) {
      throw Error(ErrorCode::kLengthMismatch,
                  classifier.name() + " returned " + std::to_string(part.size()) +
                      " labels for " + std::to_string(len) + " words");
    }
    labels.insert(labels.end(), part.begin(), part.end());
  }
  return labels;
}

}  // namespace punctseg
