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

#ifndef PUNCTSEG_TEXTPREP_H_
#define PUNCTSEG_TEXTPREP_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "punctseg/label.h"
#include "punctseg/sepp.h"

namespace punctseg {

using Sentence = std::vector<std::string>;

// Characters that are split off as tokens of their own.
inline constexpr std::string_view kDetachChars = ".,?!:;()\"'/-";

bool is_detach_char(char c);
// A token consisting of exactly one detach-class character.
bool is_punctuation_token(std::string_view token);

// Splits on ASCII whitespace and detaches every detach-class character,
// except '.', ',' and '/' with a digit on both sides ("3,5", "1/2").
Sentence tokenize(std::string_view line);

// Lines with a '<' followed later by a '>' are treated as markup debris.
bool is_markup_line(std::string_view line);

// Lower-cases ASCII and the Latin-1 Supplement capitals (U+00C0..U+00DE);
// other bytes pass through unchanged.
std::string case_fold(std::string_view word);

// ---------------------------------------------------------------------------
// Truecasing

// Frequency table of surface forms seen in non-sentence-initial position,
// keyed by case-folded form. The preferred form of a key is the most
// frequent one; equal counts go to the smallest form in byte order.
class TruecaseModel {
 public:
  void observe(std::string_view form, std::uint64_t count = 1);
  // Counts are additive, so sharded training merges associatively.
  void merge(const TruecaseModel& other);

  std::optional<std::string> preferred(std::string_view key) const;
  bool empty() const { return forms_.empty(); }
  std::size_t size() const { return forms_.size(); }

  const std::map<std::string, std::map<std::string, std::uint64_t>>& forms()
      const {
    return forms_;
  }

  // "<key>\t<form>\t<count>" per observed form, sorted by key then form.
  std::string to_tsv() const;
  static TruecaseModel from_tsv(std::string_view text);
  void save(const std::filesystem::path& path) const;
  static TruecaseModel load(const std::filesystem::path& path);

  bool operator==(const TruecaseModel&) const = default;

 private:
  std::map<std::string, std::map<std::string, std::uint64_t>> forms_;
};

// Throws EMPTY_CORPUS when no sentence has a second token.
TruecaseModel train_truecaser(const std::vector<Sentence>& sentences);

// Only the first token is touched: replaced by the preferred form of its key,
// or lower-cased when the key was never observed.
Sentence truecase(const Sentence& sentence, const TruecaseModel& model);

// ---------------------------------------------------------------------------
// Label extraction

// What a punctuation token does to the word before it.
struct PunctAction {
  enum class Kind { kLabel, kDrop, kKeepAsWord };
  Kind kind = Kind::kDrop;
  PunctLabel label = PunctLabel::kNone;
};

class PunctMapping {
 public:
  // . , ? : - map to themselves, '!' to PERIOD, ';' to COMMA; brackets,
  // quotes, apostrophes and slashes are dropped.
  static PunctMapping standard();

  void set(std::string token, PunctAction action);
  // Punctuation tokens absent from the mapping are dropped.
  std::optional<PunctAction> lookup(std::string_view token) const;

 private:
  std::map<std::string, PunctAction, std::less<>> actions_;
};

struct ExtractWarning {
  std::size_t sentence = 0;  // 0-based index into the input
  std::string message;
};

// Removes punctuation tokens from tokenized sentences and turns the first
// label-bearing mark after each word into that word's label. eos is set on
// PERIOD and on a sentence-final word that carries any mark.
SeppDocument extract_labels(const std::vector<Sentence>& sentences,
                            const PunctMapping& mapping = PunctMapping::standard(),
                            std::vector<ExtractWarning>* warnings = nullptr);

// ---------------------------------------------------------------------------
// Train/test split

enum class SplitUnit { kDocument, kSentence };

struct SplitSpec {
  double train_fraction = 0.75;
  std::uint64_t seed = 0;
  SplitUnit unit = SplitUnit::kDocument;
};

struct CorpusSplit {
  std::vector<SeppDocument> train;
  std::vector<SeppDocument> test;
};

// Shuffles the units with the seed and puts the first ceil(fraction * n) in
// train. Sentence units come from splitting every document at eos.
CorpusSplit split_corpus(const std::vector<SeppDocument>& documents,
                         const SplitSpec& spec);

// The train-set size split_corpus uses for n units.
std::size_t train_count(std::size_t n, double train_fraction);

}  // namespace punctseg

#endif  // PUNCTSEG_TEXTPREP_H_
