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

#include "punctseg/error.h"
#include "punctseg/file_util.h"
#include "punctseg/textprep.h"

namespace punctseg {

void TruecaseModel::observe(std::string_view form, std::uint64_t count) {
  forms_[case_fold(form)][std::string(form)] += count;
}

void TruecaseModel::merge(const TruecaseModel& other) {
  for (const auto& [key, counts] : other.forms_) {
    auto& mine = forms_[key];
    for (const auto& [form, n] : counts) mine[form] += n;
  }
}

std::optional<std::string> TruecaseModel::preferred(std::string_view key) const {
  auto it = forms_.find(std::string(key));
  if (it == forms_.end() || it->second.empty()) return std::nullopt;
  // std::map iterates forms in byte order, so the first maximum wins ties.
  const std::string* best = nullptr;
  std::uint64_t best_count = 0;
  for (const auto& [form, n] : it->second) {
    if (best == nullptr || n > best_count) {
      best = &form;
      best_count = n;
    }
  }
  return *best;
}

std::string TruecaseModel::to_tsv() const {
  std::string out;
  for (const auto& [key, counts] : forms_) {
    for (const auto& [form, n] : counts) {
      out += key;
      out += '\t';
      out += form;
      out += '\t';
      out += std::to_string(n);
      out += '\n';
    }
  }
  return out;
}

TruecaseModel TruecaseModel::from_tsv(std::string_view text) {
  TruecaseModel model;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (line.ends_with('\r')) line.remove_suffix(1);
    if (line.empty()) continue;
    const std::size_t t1 = line.find('\t');
    const std::size_t t2 =
        t1 == std::string_view::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string_view::npos) {
      throw Error(ErrorCode::kLineFormat, "truecase model needs 3 columns",
                  line_no);
    }
    const std::string_view key = line.substr(0, t1);
    const std::string_view form = line.substr(t1 + 1, t2 - t1 - 1);
    const std::string count_text(line.substr(t2 + 1));
    std::uint64_t count = 0;
    try {
      std::size_t used = 0;
      count = std::stoull(count_text, &used);
      if (used != count_text.size()) throw std::invalid_argument(count_text);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kLineFormat, "bad count '" + count_text + "'",
                  line_no);
    }
    if (case_fold(form) != key) {
      throw Error(ErrorCode::kLineFormat,
                  "form '" + std::string(form) + "' does not fold to key '" +
                      std::string(key) + "'",
                  line_no);
    }
    model.observe(form, count);
  }
  return model;
}

void TruecaseModel::save(const std::filesystem::path& path) const {
  write_file_atomic(path, to_tsv());
}

TruecaseModel TruecaseModel::load(const std::filesystem::path& path) {
  return from_tsv(read_text_file(path));
}

TruecaseModel train_truecaser(const std::vector<Sentence>& sentences) {
  TruecaseModel model;
  for (const Sentence& s : sentences) {
    for (std::size_t i = 1; i < s.size(); ++i) model.observe(s[i]);
  }
  if (model.empty()) {
    throw Error(ErrorCode::kEmptyCorpus,
                "no token observed in non-sentence-initial position");
  }
  return model;
}

Sentence truecase(const Sentence& sentence, const TruecaseModel& model) {
  Sentence out = sentence;
  if (out.empty()) return out;
  const std::string key = case_fold(out.front());
  if (auto form = model.preferred(key)) {
    out.front() = *form;
  } else {
    out.front() = key;
  }
  return out;
}

}  // namespace punctseg
