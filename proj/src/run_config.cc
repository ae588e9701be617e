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

#include "punctseg/run_config.h"

#include <algorithm>
#include <charconv>

#include "punctseg/error.h"
#include "punctseg/external_classifier.h"
#include "punctseg/file_util.h"
#include "punctseg/reference_model.h"
#include "punctseg/replay_classifier.h"

namespace punctseg {
namespace {

std::string_view trim(std::string_view s) {
  const std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

template <typename T>
T parse_number(const std::string& key, const std::string& value) {
  T out{};
  const char* first = value.data();
  const char* last = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || ptr != last) {
    throw Error(ErrorCode::kConfig, "'" + key + "': not a number: '" + value + "'");
  }
  return out;
}

template <typename T>
T parse_positive(const std::string& key, const std::string& value) {
  const T v = parse_number<T>(key, value);
  if (v <= 0) throw Error(ErrorCode::kConfig, "'" + key + "' must be positive");
  return v;
}

}  // namespace

ClassifierSpec ClassifierSpec::parse(std::string_view text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos || colon + 1 == text.size()) {
    throw Error(ErrorCode::kConfig,
                "classifier must be builtin:<path>, external:<cmd> or replay:<path>");
  }
  const std::string_view kind = text.substr(0, colon);
  ClassifierSpec spec;
  spec.target = std::string(text.substr(colon + 1));
  if (kind == "builtin") {
    spec.kind = Kind::kBuiltin;
  } else if (kind == "external") {
    spec.kind = Kind::kExternal;
  } else if (kind == "replay") {
    spec.kind = Kind::kReplay;
  } else {
    throw Error(ErrorCode::kConfig, "unknown classifier kind '" + std::string(kind) + "'");
  }
  return spec;
}

std::string ClassifierSpec::to_string() const {
  switch (kind) {
    case Kind::kBuiltin: return "builtin:" + target;
    case Kind::kExternal: return "external:" + target;
    case Kind::kReplay: return "replay:" + target;
  }
  return target;
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = {
      "window",           "stride",           "theta",
      "segmenters",       "pooling",          "chunk-token-budget",
      "classifier",       "seed",             "block-size",
      "threads",          "external-timeout", "external-restarts",
      "external-max-words"};
  return keys;
}

ConfigEntries parse_config_text(std::string_view text) {
  ConfigEntries entries;
  std::size_t line_no = 0;
  for (const std::string& raw : split_lines(text)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kConfig, "expected 'key = value'", line_no);
    }
    std::string key(trim(line.substr(0, eq)));
    std::replace(key.begin(), key.end(), '_', '-');
    const std::string value(trim(line.substr(eq + 1)));
    const auto& keys = config_keys();
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      throw Error(ErrorCode::kConfig, "unknown key '" + key + "'", line_no);
    }
    if (!entries.emplace(key, value).second) {
      throw Error(ErrorCode::kConfig, "duplicate key '" + key + "'", line_no);
    }
  }
  return entries;
}

ConfigEntries read_config_file(const std::filesystem::path& path) {
  return parse_config_text(read_text_file(path));
}

void apply_config(RunConfig& config, const ConfigEntries& entries) {
  for (const auto& [key, value] : entries) {
    if (key == "window") {
      config.segmenter.window_words = parse_positive<std::size_t>(key, value);
    } else if (key == "stride") {
      config.segmenter.stride = parse_positive<std::size_t>(key, value);
    } else if (key == "theta") {
      config.segmenter.theta = parse_number<double>(key, value);
    } else if (key == "segmenters") {
      auto set = LabelSet::parse(value);
      if (!set) throw Error(ErrorCode::kConfig, "bad segmenter set '" + value + "'");
      config.segmenter.segmenters = *set;
    } else if (key == "pooling") {
      auto p = pooling_from_string(value);
      if (!p) throw Error(ErrorCode::kConfig, "pooling must be per-class or pooled");
      config.segmenter.pooling = *p;
    } else if (key == "chunk-token-budget") {
      config.segmenter.chunk_token_budget = parse_positive<std::size_t>(key, value);
    } else if (key == "classifier") {
      config.classifier = ClassifierSpec::parse(value);
    } else if (key == "seed") {
      config.seed = parse_number<std::uint64_t>(key, value);
    } else if (key == "block-size") {
      config.block_size = parse_positive<std::size_t>(key, value);
    } else if (key == "threads") {
      config.threads = parse_positive<unsigned>(key, value);
    } else if (key == "external-timeout") {
      config.external_timeout = parse_number<double>(key, value);
      if (!(config.external_timeout > 0)) {
        throw Error(ErrorCode::kConfig, "'external-timeout' must be positive");
      }
    } else if (key == "external-restarts") {
      config.external_restarts = parse_number<int>(key, value);
      if (config.external_restarts < 0) {
        throw Error(ErrorCode::kConfig, "'external-restarts' must be >= 0");
      }
    } else if (key == "external-max-words") {
      config.external_max_words = parse_positive<std::size_t>(key, value);
    } else {
      throw Error(ErrorCode::kConfig, "unknown key '" + key + "'");
    }
  }
  try {
    config.segmenter.validate();
  } catch (const Error& e) {
    throw Error(ErrorCode::kConfig, e.message());
  }
}

std::unique_ptr<Classifier> make_classifier(const RunConfig& config) {
  if (!config.classifier) {
    throw Error(ErrorCode::kConfig,
                "no classifier configured (use --classifier builtin:<path>, "
                "external:<cmd> or replay:<path>)");
  }
  const ClassifierSpec& spec = *config.classifier;
  switch (spec.kind) {
    case ClassifierSpec::Kind::kBuiltin:
      return std::make_unique<ReferenceClassifier>(
          std::make_shared<const LinearModel>(load_model(spec.target)));
    case ClassifierSpec::Kind::kReplay:
      return std::make_unique<ReplayClassifier>(ReplayClassifier::from_file(spec.target));
    case ClassifierSpec::Kind::kExternal: {
      ExternalAdapterConfig ext;
      ext.command = spec.target;
      ext.timeout_seconds = config.external_timeout;
      ext.max_restarts = config.external_restarts;
      ext.max_window_words = config.external_max_words;
      return std::make_unique<ExternalClassifier>(ext);
    }
  }
  throw Error(ErrorCode::kConfig, "unsupported classifier");
}

}  // namespace punctseg
