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

#ifndef PUNCTSEG_REPLAY_CLASSIFIER_H_
#define PUNCTSEG_REPLAY_CLASSIFIER_H_

#include <filesystem>
#include <string>
#include <unordered_map>
#include <vector>

#include "punctseg/classifier.h"
#include "punctseg/sepp.h"

namespace punctseg {

// Test double that answers from pre-recorded labels. A window is located in
// the recorded stream by its first exact occurrence, and the recorded labels
// at that position are returned.
class ReplayClassifier : public Classifier {
 public:
  explicit ReplayClassifier(const SeppDocument& recording);
  static ReplayClassifier from_file(const std::filesystem::path& path);

  std::vector<PunctLabel> classify(WordSpan window) const override;
  std::string name() const override { return "replay"; }

 private:
  std::vector<std::string> words_;
  std::vector<PunctLabel> labels_;
  std::unordered_map<std::string, std::vector<std::size_t>> positions_;
};

}  // namespace punctseg

#endif  // PUNCTSEG_REPLAY_CLASSIFIER_H_
