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

#ifndef PUNCTSEG_SEPP_H_
#define PUNCTSEG_SEPP_H_

// Three-column SEPP TSV: <word> TAB <0|1> TAB <label-char> LF per token.

#include <cstddef>
#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "punctseg/label.h"

namespace punctseg {

struct LabeledToken {
  std::string word;
  bool eos = false;
  PunctLabel label = PunctLabel::kNone;

  bool operator==(const LabeledToken&) const = default;
};

struct SeppDocument {
  std::vector<LabeledToken> tokens;
  std::optional<std::string> source_id;

  bool operator==(const SeppDocument&) const = default;
};

// True when the flag agrees with the label: PERIOD implies eos, NONE implies
// no eos. Other labels accept either flag.
bool is_consistent(const LabeledToken& token);

// The flag write_sepp emits for this token.
bool derived_eos(const LabeledToken& token);

struct ParseWarning {
  std::size_t line = 0;
  std::string message;
};

struct ParseOptions {
  // Turns flag/label inconsistencies into INCONSISTENT_FLAG errors.
  bool strict = false;
};

SeppDocument parse_sepp(std::string_view text, const ParseOptions& options = {},
                        std::vector<ParseWarning>* warnings = nullptr);
SeppDocument parse_sepp(std::istream& in, const ParseOptions& options = {},
                        std::vector<ParseWarning>* warnings = nullptr);
SeppDocument read_sepp_file(const std::filesystem::path& path,
                            const ParseOptions& options = {},
                            std::vector<ParseWarning>* warnings = nullptr);

std::string write_sepp(const SeppDocument& doc);

// The word column only: the simulated unpunctuated ASR stream.
std::vector<std::string> strip_labels(const SeppDocument& doc);

std::vector<PunctLabel> labels_of(const SeppDocument& doc);

// Sentences end at eos tokens; a trailing run without eos is a final
// sentence of its own.
std::vector<SeppDocument> split_sentences(const SeppDocument& doc);
std::size_t count_sentences(const SeppDocument& doc);

SeppDocument concatenate(const std::vector<SeppDocument>& docs);

}  // namespace punctseg

#endif  // PUNCTSEG_SEPP_H_
