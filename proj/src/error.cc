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

namespace punctseg {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kLineFormat: return "LINE_FORMAT";
    case ErrorCode::kBadFlag: return "BAD_FLAG";
    case ErrorCode::kBadLabel: return "BAD_LABEL";
    case ErrorCode::kEmptyWord: return "EMPTY_WORD";
    case ErrorCode::kInconsistentFlag: return "INCONSISTENT_FLAG";
    case ErrorCode::kEmptyCorpus: return "EMPTY_CORPUS";
    case ErrorCode::kTooFewUnits: return "TOO_FEW_UNITS";
    case ErrorCode::kEmptyTrainingSet: return "EMPTY_TRAINING_SET";
    case ErrorCode::kEmptyWindow: return "EMPTY_WINDOW";
    case ErrorCode::kProtocolLengthMismatch: return "PROTOCOL_LENGTH_MISMATCH";
    case ErrorCode::kProtocolBadLabel: return "PROTOCOL_BAD_LABEL";
    case ErrorCode::kTimeout: return "TIMEOUT";
    case ErrorCode::kProcessDied: return "PROCESS_DIED";
    case ErrorCode::kBadMagic: return "BAD_MAGIC";
    case ErrorCode::kVersionMismatch: return "VERSION_MISMATCH";
    case ErrorCode::kCorrupt: return "CORRUPT";
    case ErrorCode::kEmptyStream: return "EMPTY_STREAM";
    case ErrorCode::kLengthMismatch: return "LENGTH_MISMATCH";
    case ErrorCode::kEmptyMatrix: return "EMPTY_MATRIX";
    case ErrorCode::kOutOfRange: return "OUT_OF_RANGE";
    case ErrorCode::kTooShort: return "TOO_SHORT";
    case ErrorCode::kEmpty: return "EMPTY";
    case ErrorCode::kWordMismatch: return "WORD_MISMATCH";
    case ErrorCode::kIo: return "IO";
    case ErrorCode::kUsage: return "USAGE";
    case ErrorCode::kConfig: return "CONFIG";
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
  }
  return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code),
      message_(message) {}

Error::Error(ErrorCode code, const std::string& message, std::size_t line)
    : std::runtime_error(std::string(error_code_name(code)) + ": line " +
                         std::to_string(line) + ": " + message),
      code_(code),
      message_(message),
      line_(line) {}

}  // namespace punctseg
