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

#ifndef PUNCTSEG_ERROR_H_
#define PUNCTSEG_ERROR_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace punctseg {

enum class ErrorCode {
  // SEPP parsing.
  kLineFormat,
  kBadFlag,
  kBadLabel,
  kEmptyWord,
  kInconsistentFlag,
  // Corpus preparation.
  kEmptyCorpus,
  kTooFewUnits,
  // Classifiers.
  kEmptyTrainingSet,
  kEmptyWindow,
  kProtocolLengthMismatch,
  kProtocolBadLabel,
  kTimeout,
  kProcessDied,
  kBadMagic,
  kVersionMismatch,
  kCorrupt,
  // Segmenter.
  kEmptyStream,
  // Metrics.
  kLengthMismatch,
  kEmptyMatrix,
  kOutOfRange,
  kTooShort,
  kEmpty,
  // CLI and plumbing.
  kWordMismatch,
  kIo,
  kUsage,
  kConfig,
  kInvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

// Every failure in the library is reported as an Error. Parser errors carry
// the 1-based line number, alignment errors the offending word index.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  Error(ErrorCode code, const std::string& message, std::size_t line);

  ErrorCode code() const { return code_; }
  std::optional<std::size_t> line() const { return line_; }
  // The message without the code prefix.
  const std::string& message() const { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
  std::optional<std::size_t> line_;
};

}  // namespace punctseg

#endif  // PUNCTSEG_ERROR_H_
