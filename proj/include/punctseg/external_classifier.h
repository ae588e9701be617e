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

#ifndef PUNCTSEG_EXTERNAL_CLASSIFIER_H_
#define PUNCTSEG_EXTERNAL_CLASSIFIER_H_

// Bridge to a classifier living in another process (e.g. a Python wrapper
// around a fine-tuned transformer). Line protocol, UTF-8:
//   request : words joined by single spaces, LF
//   response: one label character per word ("0.,?:-"), single spaces, LF
// One response per request, in order. The child must flush after each line.

#include <cstddef>
#include <mutex>
#include <string>
#include <sys/types.h>

#include "punctseg/classifier.h"

namespace punctseg {

struct ExternalAdapterConfig {
  // Run through /bin/sh -c with stdin and stdout connected to the adapter.
  std::string command;
  double timeout_seconds = 30.0;
  // Respawns allowed over the adapter's lifetime after the child dies.
  int max_restarts = 2;
  // Subword-tokenized models cap their input; 200 words leaves headroom
  // under a 512-token limit.
  std::size_t max_window_words = 200;
};

// Parses one response line against the window length. Throws
// PROTOCOL_BAD_LABEL or PROTOCOL_LENGTH_MISMATCH.
std::vector<PunctLabel> parse_protocol_response(std::string_view line,
                                                std::size_t expected);

std::string format_protocol_request(WordSpan window);

class ExternalClassifier : public Classifier {
 public:
  explicit ExternalClassifier(ExternalAdapterConfig config);
  ~ExternalClassifier() override;

  ExternalClassifier(const ExternalClassifier&) = delete;
  ExternalClassifier& operator=(const ExternalClassifier&) = delete;

  // Requests are serialized on the single child process. Throws TIMEOUT
  // (and kills the child) when no response arrives in time, PROCESS_DIED
  // once the restart budget is spent.
  std::vector<PunctLabel> classify(WordSpan window) const override;
  std::string name() const override { return "external"; }
  std::size_t max_window_words() const override {
    return config_.max_window_words;
  }

  int restarts_used() const;

 private:
  struct ChildGone {};

  void start() const;
  void stop() const;
  void send_all(const std::string& data, long long deadline_ms) const;
  std::string read_line(long long deadline_ms) const;

  ExternalAdapterConfig config_;
  mutable std::mutex mu_;
  mutable pid_t pid_ = -1;
  mutable int fd_ = -1;
  mutable bool ever_started_ = false;
  mutable int restarts_ = 0;
  mutable std::string rx_;
};

}  // namespace punctseg

#endif  // PUNCTSEG_EXTERNAL_CLASSIFIER_H_
