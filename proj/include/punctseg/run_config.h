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

#ifndef PUNCTSEG_RUN_CONFIG_H_
#define PUNCTSEG_RUN_CONFIG_H_

// Run configuration shared by the CLI subcommands. Config files are UTF-8,
// one `key = value` per line; lines starting with '#' are comments. Keys are the long flag
// names without the leading dashes, e.g. `theta = 0.2` or `segmenters = .?`.
// Unknown keys are errors.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "punctseg/classifier.h"
#include "punctseg/segmenter.h"

namespace punctseg {

struct ClassifierSpec {
  enum class Kind { kBuiltin, kExternal, kReplay };

  Kind kind = Kind::kBuiltin;
  // Model path, shell command or SEPP recording path.
  std::string target;

  // "builtin:<path>", "external:<cmd>" or "replay:<path>".
  static ClassifierSpec parse(std::string_view text);
  std::string to_string() const;
  bool operator==(const ClassifierSpec&) const = default;
};

struct RunConfig {
  SegmenterConfig segmenter;
  std::optional<ClassifierSpec> classifier;
  double external_timeout = 30.0;
  int external_restarts = 2;
  std::size_t external_max_words = 200;
  std::size_t block_size = 1000;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

using ConfigEntries = std::map<std::string, std::string>;

// Keys accepted in config files.
const std::vector<std::string>& config_keys();

// Throws CONFIG on malformed lines, duplicate keys and unknown keys.
ConfigEntries parse_config_text(std::string_view text);
ConfigEntries read_config_file(const std::filesystem::path& path);

// Applies entries on top of `config`; throws CONFIG naming the bad key.
void apply_config(RunConfig& config, const ConfigEntries& entries);

// Throws CONFIG when no classifier is configured.
std::unique_ptr<Classifier> make_classifier(const RunConfig& config);

}  // namespace punctseg

#endif  // PUNCTSEG_RUN_CONFIG_H_
