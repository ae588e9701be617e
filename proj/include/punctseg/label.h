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

#ifndef PUNCTSEG_LABEL_H_
#define PUNCTSEG_LABEL_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace punctseg {

// The mark that follows a word. The enumerator order is the global tie-break
// order used by every argmax in the library.
enum class PunctLabel : std::uint8_t {
  kNone = 0,
  kPeriod = 1,
  kComma = 2,
  kQuestion = 3,
  kColon = 4,
  kDash = 5,
};

inline constexpr std::size_t kNumLabels = 6;

inline constexpr std::array<PunctLabel, kNumLabels> kTieOrder = {
    PunctLabel::kNone,     PunctLabel::kPeriod, PunctLabel::kComma,
    PunctLabel::kQuestion, PunctLabel::kColon,  PunctLabel::kDash};

// Row/column order of printed confusion matrices and reports: 0 . , ? - :
inline constexpr std::array<PunctLabel, kNumLabels> kReportOrder = {
    PunctLabel::kNone,     PunctLabel::kPeriod, PunctLabel::kComma,
    PunctLabel::kQuestion, PunctLabel::kDash,   PunctLabel::kColon};

constexpr std::size_t index_of(PunctLabel label) {
  return static_cast<std::size_t>(label);
}

constexpr PunctLabel label_at(std::size_t index) {
  return static_cast<PunctLabel>(index);
}

char to_char(PunctLabel label);
std::optional<PunctLabel> label_from_char(char c);
std::optional<PunctLabel> label_from_string(std::string_view s);

std::string to_string(const std::vector<PunctLabel>& labels);

// A subset of the label alphabet, e.g. the segmenter set.
class LabelSet {
 public:
  constexpr LabelSet() = default;
  constexpr LabelSet(std::initializer_list<PunctLabel> labels) {
    for (PunctLabel l : labels) insert(l);
  }

  constexpr void insert(PunctLabel l) { bits_ |= mask(l); }
  constexpr void erase(PunctLabel l) { bits_ &= static_cast<std::uint8_t>(~mask(l)); }
  constexpr bool contains(PunctLabel l) const { return (bits_ & mask(l)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool operator==(const LabelSet&) const = default;

  std::vector<PunctLabel> members() const;

  // "." or ".?" style; the members' characters in tie order.
  std::string to_string() const;
  // Parses ".?" and similar; every character must be a label character.
  static std::optional<LabelSet> parse(std::string_view chars);

 private:
  static constexpr std::uint8_t mask(PunctLabel l) {
    return static_cast<std::uint8_t>(1u << index_of(l));
  }
  std::uint8_t bits_ = 0;
};

}  // namespace punctseg

#endif  // PUNCTSEG_LABEL_H_
