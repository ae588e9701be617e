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

#ifndef PUNCTSEG_FILE_UTIL_H_
#define PUNCTSEG_FILE_UTIL_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace punctseg {

std::string read_text_file(const std::filesystem::path& path);

// Writes to a sibling temporary file, then renames over the target.
void write_file_atomic(const std::filesystem::path& path,
                       std::string_view content);

// Whitespace-separated words of a plain-text file.
std::vector<std::string> read_word_stream(const std::filesystem::path& path);

// Lines of the text with LF or CRLF endings; a UTF-8 BOM is skipped.
std::vector<std::string> split_lines(std::string_view text);

}  // namespace punctseg

#endif  // PUNCTSEG_FILE_UTIL_H_
