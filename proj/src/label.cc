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

#include "punctseg/label.h"

namespace punctseg {

char to_char(PunctLabel label) {
  switch (label) {
    case PunctLabel::kNone: return '0';
    case PunctLabel::kPeriod: return '.';
    case PunctLabel::kComma: return ',';
    case PunctLabel::kQuestion: return '?';
    case PunctLabel::kColon: return ':';
    case PunctLabel::kDash: return '-';
  }
  return '0';
}

std::optional<PunctLabel> label_from_char(char c) {
  switch (c) {
    case '0': return PunctLabel::kNone;
    case '.': return PunctLabel::kPeriod;
    case ',': return PunctLabel::kComma;
    case '?': return PunctLabel::kQuestion;
    case ':': return PunctLabel::kColon;
    case '-': return PunctLabel::kDash;
    default: return std::nullopt;
  }
}

std::optional<PunctLabel> label_from_string(std::string_view s) {
  if (s.size() != 1) return std::nullopt;
  return label_from_char(s[0]);
}

std::string to_string(const std::vector<PunctLabel>& labels) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out.push_back(to_char(labels[i]));
  }
  return out;
}

std::vector<PunctLabel> LabelSet::members() const {
  std::vector<PunctLabel> out;
  for (PunctLabel l : kTieOrder) {
    if (contains(l)) out.push_back(l);
  }
  return out;
}

std::string LabelSet::to_string() const {
  std::string out;
  for (PunctLabel l : members()) out.push_back(to_char(l));
  return out;
}

std::optional<LabelSet> LabelSet::parse(std::string_view chars) {
  LabelSet set;
  for (char c : chars) {
    auto l = label_from_char(c);
    if (!l) return std::nullopt;
    set.insert(*l);
  }
  return set;
}

}  // namespace punctseg
