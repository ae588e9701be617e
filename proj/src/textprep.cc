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

#include "punctseg/textprep.h"

#include <cmath>
#include <numeric>

#include "punctseg/error.h"
#include "punctseg/random.h"

namespace punctseg {
namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool stays_between_digits(char c) { return c == '.' || c == ',' || c == '/'; }

}  // namespace

bool is_detach_char(char c) {
  return kDetachChars.find(c) != std::string_view::npos;
}

bool is_punctuation_token(std::string_view token) {
  return token.size() == 1 && is_detach_char(token[0]);
}

Sentence tokenize(std::string_view line) {
  Sentence tokens;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) tokens.push_back(std::move(current));
    current.clear();
  };
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (is_space(c)) {
      flush();
    } else if (is_detach_char(c)) {
      const bool digit_flanked = stays_between_digits(c) && i > 0 &&
                                 i + 1 < line.size() && is_digit(line[i - 1]) &&
                                 is_digit(line[i + 1]);
      if (digit_flanked) {
        current.push_back(c);
      } else {
        flush();
        tokens.emplace_back(1, c);
      }
    } else {
      current.push_back(c);
    }
  }
  flush();
  return tokens;
}

bool is_markup_line(std::string_view line) {
  const std::size_t open = line.find('<');
  return open != std::string_view::npos &&
         line.find('>', open + 1) != std::string_view::npos;
}

std::string case_fold(std::string_view word) {
  std::string out(word);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto c = static_cast<unsigned char>(out[i]);
    if (c >= 'A' && c <= 'Z') {
      out[i] = static_cast<char>(c + ('a' - 'A'));
    } else if (c == 0xC3 && i + 1 < out.size()) {
      // U+00C0..U+00DE encode as C3 80..C3 9E; U+00D7 (multiplication sign)
      // has no lower-case partner.
      const auto next = static_cast<unsigned char>(out[i + 1]);
      if (next >= 0x80 && next <= 0x9E && next != 0x97) {
        out[i + 1] = static_cast<char>(next + 0x20);
      }
      ++i;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

PunctMapping PunctMapping::standard() {
  using Kind = PunctAction::Kind;
  PunctMapping m;
  m.set(".", {Kind::kLabel, PunctLabel::kPeriod});
  m.set(",", {Kind::kLabel, PunctLabel::kComma});
  m.set("?", {Kind::kLabel, PunctLabel::kQuestion});
  m.set(":", {Kind::kLabel, PunctLabel::kColon});
  m.set("-", {Kind::kLabel, PunctLabel::kDash});
  m.set("!", {Kind::kLabel, PunctLabel::kPeriod});
  m.set(";", {Kind::kLabel, PunctLabel::kComma});
  for (const char* drop : {"(", ")", "\"", "'", "/"}) {
    m.set(drop, {Kind::kDrop, PunctLabel::kNone});
  }
  return m;
}

void PunctMapping::set(std::string token, PunctAction action) {
  actions_[std::move(token)] = action;
}

std::optional<PunctAction> PunctMapping::lookup(std::string_view token) const {
  auto it = actions_.find(token);
  if (it == actions_.end()) return std::nullopt;
  return it->second;
}

SeppDocument extract_labels(const std::vector<Sentence>& sentences,
                            const PunctMapping& mapping,
                            std::vector<ExtractWarning>* warnings) {
  using Kind = PunctAction::Kind;
  SeppDocument doc;
  for (std::size_t s = 0; s < sentences.size(); ++s) {
    const std::size_t first = doc.tokens.size();
    bool label_open = false;
    for (const std::string& token : sentences[s]) {
      std::optional<PunctAction> action = mapping.lookup(token);
      if (!action && is_punctuation_token(token)) {
        action = PunctAction{Kind::kDrop, PunctLabel::kNone};
      }
      if (!action || action->kind == Kind::kKeepAsWord) {
        doc.tokens.push_back({token, false, PunctLabel::kNone});
        label_open = true;
      } else if (action->kind == Kind::kLabel && label_open) {
        doc.tokens.back().label = action->label;
        label_open = false;
      }
    }
    if (doc.tokens.size() == first) {
      if (warnings != nullptr) {
        warnings->push_back({s, "EMPTY_SENTENCE: no words left after removing punctuation"});
      }
      continue;
    }
    for (std::size_t i = first; i < doc.tokens.size(); ++i) {
      LabeledToken& t = doc.tokens[i];
      const bool last = i + 1 == doc.tokens.size();
      t.eos = t.label == PunctLabel::kPeriod ||
              (last && t.label != PunctLabel::kNone);
    }
  }
  return doc;
}

// ---------------------------------------------------------------------------

std::size_t train_count(std::size_t n, double train_fraction) {
  // The epsilon keeps 0.7 * 10 = 7.000000000000001 from rounding up to 8.
  const double exact = train_fraction * static_cast<double>(n);
  return static_cast<std::size_t>(std::ceil(exact - 1e-9));
}

CorpusSplit split_corpus(const std::vector<SeppDocument>& documents,
                         const SplitSpec& spec) {
  if (!(spec.train_fraction > 0.0 && spec.train_fraction < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "train fraction must lie strictly between 0 and 1");
  }
  std::vector<SeppDocument> units;
  if (spec.unit == SplitUnit::kDocument) {
    units = documents;
  } else {
    for (const SeppDocument& d : documents) {
      for (SeppDocument& s : split_sentences(d)) units.push_back(std::move(s));
    }
  }
  if (units.size() < 2) {
    throw Error(ErrorCode::kTooFewUnits,
                "need at least 2 units to split, got " +
                    std::to_string(units.size()));
  }

  std::vector<std::size_t> order(units.size());
  std::iota(order.begin(), order.end(), 0);
  Rng rng(spec.seed);
  shuffle_in_place(order, rng);

  const std::size_t n_train = train_count(units.size(), spec.train_fraction);
  CorpusSplit split;
  for (std::size_t k = 0; k < order.size(); ++k) {
    auto& target = k < n_train ? split.train : split.test;
    target.push_back(std::move(units[order[k]]));
  }
  return split;
}

}  // namespace punctseg
