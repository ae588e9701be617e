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

#include "punctseg/sepp.h"

#include <fstream>
#include <sstream>

#include "punctseg/error.h"

namespace punctseg {
namespace {

constexpr std::string_view kUtf8Bom = "\xEF\xBB\xBF";

LabeledToken parse_line(std::string_view line, std::size_t line_no) {
  const std::size_t tab1 = line.find('\t');
  const std::size_t tab2 =
      tab1 == std::string_view::npos ? tab1 : line.find('\t', tab1 + 1);
  if (tab2 == std::string_view::npos ||
      line.find('\t', tab2 + 1) != std::string_view::npos) {
    throw Error(ErrorCode::kLineFormat, "expected 3 tab-separated fields",
                line_no);
  }
  LabeledToken token;
  token.word = std::string(line.substr(0, tab1));
  const std::string_view flag = line.substr(tab1 + 1, tab2 - tab1 - 1);
  const std::string_view label = line.substr(tab2 + 1);
  if (token.word.empty()) {
    throw Error(ErrorCode::kEmptyWord, "empty word column", line_no);
  }
  if (flag == "0") {
    token.eos = false;
  } else if (flag == "1") {
    token.eos = true;
  } else {
    throw Error(ErrorCode::kBadFlag,
                "column 2 must be 0 or 1, got '" + std::string(flag) + "'",
                line_no);
  }
  auto parsed = label_from_string(label);
  if (!parsed) {
    throw Error(ErrorCode::kBadLabel,
                "column 3 must be one of 0 . , ? : -, got '" +
                    std::string(label) + "'",
                line_no);
  }
  token.label = *parsed;
  return token;
}

bool is_blank(std::string_view line) {
  return line.find_first_not_of(' ') == std::string_view::npos;
}

}  // namespace

bool is_consistent(const LabeledToken& token) {
  if (token.label == PunctLabel::kPeriod) return token.eos;
  if (token.label == PunctLabel::kNone) return !token.eos;
  return true;
}

bool derived_eos(const LabeledToken& token) {
  if (token.label == PunctLabel::kPeriod) return true;
  if (token.label == PunctLabel::kNone) return false;
  return token.eos;
}

SeppDocument parse_sepp(std::string_view text, const ParseOptions& options,
                        std::vector<ParseWarning>* warnings) {
  if (text.starts_with(kUtf8Bom)) text.remove_prefix(kUtf8Bom.size());
  SeppDocument doc;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (line.ends_with('\r')) line.remove_suffix(1);
    if (is_blank(line)) continue;

    LabeledToken token = parse_line(line, line_no);
    if (!is_consistent(token)) {
      const std::string msg = "flag " + std::string(token.eos ? "1" : "0") +
                              " disagrees with label '" +
                              to_char(token.label) + "'";
      if (options.strict) {
        throw Error(ErrorCode::kInconsistentFlag, msg, line_no);
      }
      if (warnings != nullptr) warnings->push_back({line_no, msg});
    }
    doc.tokens.push_back(std::move(token));
  }
  return doc;
}

SeppDocument parse_sepp(std::istream& in, const ParseOptions& options,
                        std::vector<ParseWarning>* warnings) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_sepp(buffer.str(), options, warnings);
}

SeppDocument read_sepp_file(const std::filesystem::path& path,
                            const ParseOptions& options,
                            std::vector<ParseWarning>* warnings) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  SeppDocument doc = parse_sepp(in, options, warnings);
  doc.source_id = path.string();
  return doc;
}

std::string write_sepp(const SeppDocument& doc) {
  std::string out;
  for (const LabeledToken& t : doc.tokens) {
    out += t.word;
    out += derived_eos(t) ? "\t1\t" : "\t0\t";
    out += to_char(t.label);
    out += '\n';
  }
  return out;
}

std::vector<std::string> strip_labels(const SeppDocument& doc) {
  std::vector<std::string> words;
  words.reserve(doc.tokens.size());
  for (const LabeledToken& t : doc.tokens) words.push_back(t.word);
  return words;
}

std::vector<PunctLabel> labels_of(const SeppDocument& doc) {
  std::vector<PunctLabel> labels;
  labels.reserve(doc.tokens.size());
  for (const LabeledToken& t : doc.tokens) labels.push_back(t.label);
  return labels;
}

std::vector<SeppDocument> split_sentences(const SeppDocument& doc) {
  std::vector<SeppDocument> sentences;
  SeppDocument current;
  for (const LabeledToken& t : doc.tokens) {
    current.tokens.push_back(t);
    if (t.eos) {
      sentences.push_back(std::move(current));
      current = SeppDocument{};
    }
  }
  if (!current.tokens.empty()) sentences.push_back(std::move(current));
  return sentences;
}

std::size_t count_sentences(const SeppDocument& doc) {
  std::size_t n = 0;
  for (const LabeledToken& t : doc.tokens) n += t.eos ? 1 : 0;
  if (!doc.tokens.empty() && !doc.tokens.back().eos) ++n;
  return n;
}

SeppDocument concatenate(const std::vector<SeppDocument>& docs) {
  SeppDocument out;
  for (const SeppDocument& d : docs) {
    out.tokens.insert(out.tokens.end(), d.tokens.begin(), d.tokens.end());
  }
  return out;
}

}  // namespace punctseg
