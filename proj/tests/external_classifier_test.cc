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

#include "punctseg/external_classifier.h"

#include <chrono>
#include <filesystem>
#include <thread>

#include "gtest/gtest.h"
#include "punctseg/error.h"

namespace punctseg {
namespace {

using Words = std::vector<std::string>;
using Labels = std::vector<PunctLabel>;
constexpr PunctLabel N = PunctLabel::kNone;

std::string stub(const std::string& args) {
  return std::string(PUNCTSEG_STUB_CLASSIFIER) + " " + args;
}

ErrorCode classify_error(const ExternalClassifier& clf, const Words& w) {
  try {
    clf.classify(w);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kIo;
}

TEST(ProtocolTest, RequestAndResponseFormat) {
  EXPECT_EQ(format_protocol_request(Words{"kijk", "om", "je", "heen"}), "kijk om je heen\n");
  EXPECT_EQ(parse_protocol_response("0 , ? .\r", 4),
            (Labels{N, PunctLabel::kComma, PunctLabel::kQuestion, PunctLabel::kPeriod}));
  EXPECT_THROW(format_protocol_request(Words{"a b"}), Error);
  EXPECT_THROW(parse_protocol_response("0  0", 2), Error);
}

TEST(ExternalClassifierTest, EchoStub) {
  ExternalClassifier clf({stub("last ."), 10, 0, 200});
  EXPECT_EQ(clf.classify(Words{"kijk", "om", "je", "heen"}),
            (Labels{N, N, N, PunctLabel::kPeriod}));
  // The child is reused across requests.
  EXPECT_EQ(clf.classify(Words{"a"}), (Labels{PunctLabel::kPeriod}));
  EXPECT_EQ(clf.restarts_used(), 0);
  EXPECT_EQ(clf.name(), "external");
  EXPECT_EQ(clf.max_window_words(), 200u);
}

TEST(ExternalClassifierTest, LengthMismatch) {
  ExternalClassifier clf({stub("short"), 10, 0, 200});
  EXPECT_EQ(classify_error(clf, Words{"a", "b", "c", "d"}),
            ErrorCode::kProtocolLengthMismatch);
}

TEST(ExternalClassifierTest, BadLabel) {
  ExternalClassifier clf({stub("bad"), 10, 0, 200});
  EXPECT_EQ(classify_error(clf, Words{"a", "b", "c", "d"}), ErrorCode::kProtocolBadLabel);
}

TEST(ExternalClassifierTest, TimeoutIsBounded) {
  ExternalClassifier clf({stub("sleep 5"), 0.3, 0, 200});
  const auto t0 = std::chrono::steady_clock::now();
  EXPECT_EQ(classify_error(clf, Words{"a"}), ErrorCode::kTimeout);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  EXPECT_LT(secs, 2.0);
}

TEST(ExternalClassifierTest, DiesAfterRestartBudget) {
  ExternalClassifier clf({stub("die"), 5, 2, 200});
  EXPECT_EQ(classify_error(clf, Words{"a"}), ErrorCode::kProcessDied);
  EXPECT_EQ(clf.restarts_used(), 2);
}

TEST(ExternalClassifierTest, RestartRecovers) {
  const auto state = std::filesystem::temp_directory_path() /
                     ("punctseg_die_once_" + std::to_string(::getpid()));
  std::filesystem::remove(state);
  ExternalClassifier clf({stub("die-once " + state.string()), 5, 1, 200});
  EXPECT_EQ(clf.classify(Words{"x", "y"}), (Labels{N, PunctLabel::kPeriod}));
  EXPECT_EQ(clf.restarts_used(), 1);
  std::filesystem::remove(state);
}

TEST(ExternalClassifierTest, MissingCommandDies) {
  ExternalClassifier clf({"/nonexistent/punctseg-model", 5, 1, 200});
  EXPECT_EQ(classify_error(clf, Words{"a"}), ErrorCode::kProcessDied);
}

TEST(ExternalClassifierTest, ConcurrentCallsAreSerialized) {
  ExternalClassifier clf({stub("fixed ,"), 10, 0, 200});
  std::vector<std::thread> threads;
  std::atomic<int> ok{0};
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      for (int i = 0; i < 25; ++i) {
        const Words w(1 + (t + i) % 7, "w");
        if (clf.classify(w) == Labels(w.size(), PunctLabel::kComma)) ++ok;
      }
    });
  }
  for (auto& th : threads) th.join();
  EXPECT_EQ(ok.load(), 100);
}

TEST(ExternalClassifierTest, RejectsBadConfig) {
  EXPECT_THROW(ExternalClassifier({stub("die"), 0, 0, 200}), Error);
}

}  // namespace
}  // namespace punctseg
