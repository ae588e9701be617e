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

#include "punctseg/replay_classifier.h"

#include <algorithm>

#include "punctseg/error.h"

namespace punctseg {

ReplayClassifier::ReplayClassifier(const SeppDocument& recording)
    : words_(strip_labels(recording)), labels_(labels_of(recording)) {
  for (std::size_t i = 0; i < words_.size(); ++i) positions_[words_[i]].push_back(i);
}

ReplayClassifier ReplayClassifier::from_file(const std::filesystem::path& path) {
  return ReplayClassifier(read_sepp_file(path));
}

std::vector<PunctLabel> ReplayClassifier::classify(WordSpan window) const {
  if (window.empty()) {
    throw Error(ErrorCode::kEmptyWindow, "cannot classify an empty window");
  }
  auto it = positions_.find(window.front());
  if (it != positions_.end()) {
    for (std::size_t start : it->second) {
      if (start + window.size() > words_.size()) break;
      if (std::equal(window.begin(), window.end(), words_.begin() + start)) {
        return {labels_.begin() + static_cast<std::ptrdiff_t>(start),
                labels_.begin() + static_cast<std::ptrdiff_t>(start + window.size())};
      }
    }
  }
  throw Error(ErrorCode::kInvalidArgument,
              "replay recording has no window starting with '" +
                  window.front() + "' of length " + std::to_string(window.size()));
}

}  // namespace punctseg
