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

#include <filesystem>
#include <fstream>
#include <random>

#include "gtest/gtest.h"
#include "punctseg/error.h"
#include "punctseg/reference_model.h"

namespace punctseg {
namespace {

LinearModel small_model() {
  SeppDocument d;
  const char* words[] = {"kijk", "om", "je", "heen", "alles", "beweegt"};
  for (int i = 0; i < 120; ++i) {
    const PunctLabel l = i % 6 == 5 ? PunctLabel::kPeriod
                         : i % 6 == 3 ? PunctLabel::kComma
                                      : PunctLabel::kNone;
    d.tokens.push_back({words[i % 6], l == PunctLabel::kPeriod, l});
  }
  return train_reference({d}, 3, 2);
}

ErrorCode load_error(const std::string& bytes) {
  try {
    deserialize_model(bytes);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kIo;
}

TEST(ModelIoTest, RoundTripPreservesPredictions) {
  const LinearModel m = small_model();
  const auto path = std::filesystem::temp_directory_path() / "punctseg_model.bin";
  save_model(m, path);
  const LinearModel back = load_model(path);
  std::filesystem::remove(path);
  EXPECT_EQ(back, m);
  std::mt19937_64 rng(1);
  const std::vector<std::string> vocab = {"kijk", "om", "je", "heen", "alles", "beweegt", "zon"};
  for (int probe = 0; probe < 100; ++probe) {
    std::vector<std::string> w(1 + rng() % 30);
    for (auto& s : w) s = vocab[rng() % vocab.size()];
    EXPECT_EQ(classify_reference(back, w), classify_reference(m, w));
  }
}

TEST(ModelIoTest, SerializationIsCanonical) {
  const LinearModel m = small_model();
  EXPECT_EQ(serialize_model(deserialize_model(serialize_model(m))), serialize_model(m));
  EXPECT_EQ(serialize_model(m).substr(0, 4), "FSLM");
}

TEST(ModelIoTest, RejectsDamagedFiles) {
  const std::string bytes = serialize_model(small_model());
  EXPECT_EQ(load_error("XSLM" + bytes.substr(4)), ErrorCode::kBadMagic);
  EXPECT_EQ(load_error(""), ErrorCode::kBadMagic);
  std::string wrong_version = bytes;
  wrong_version[4] = 2;
  EXPECT_EQ(load_error(wrong_version), ErrorCode::kVersionMismatch);
  for (std::size_t cut : {5ul, 8ul, 20ul, bytes.size() / 2, bytes.size() - 1}) {
    EXPECT_EQ(load_error(bytes.substr(0, cut)), ErrorCode::kCorrupt) << cut;
  }
  EXPECT_EQ(load_error(bytes + "x"), ErrorCode::kCorrupt);
}

TEST(ModelIoTest, MissingFileIsIoError) {
  try {
    load_model("/nonexistent/punctseg.model");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIo);
  }
}

}  // namespace
}  // namespace punctseg
