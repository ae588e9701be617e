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

#include <algorithm>
#include <bit>

#include "punctseg/error.h"
#include "punctseg/file_util.h"
#include "punctseg/reference_model.h"

namespace punctseg {
namespace {

constexpr std::string_view kMagic = "FSLM";

class Writer {
 public:
  void bytes(std::string_view b) { out_.append(b); }
  void u8(std::uint8_t v) { out_.push_back(static_cast<char>(v)); }
  void u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) u8(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) u8(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void f64(double v) { u64(std::bit_cast<std::uint64_t>(v)); }
  void section(const Writer& payload) {
    u64(payload.out_.size());
    bytes(payload.out_);
  }
  std::string take() { return std::move(out_); }

 private:
  std::string out_;
};

class Reader {
 public:
  explicit Reader(std::string_view data) : data_(data) {}

  std::string_view bytes(std::size_t n) {
    need(n);
    std::string_view v = data_.substr(pos_, n);
    pos_ += n;
    return v;
  }
  std::uint8_t u8() { return static_cast<std::uint8_t>(bytes(1)[0]); }
  std::uint32_t u32() {
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(u8()) << (8 * i);
    return v;
  }
  std::uint64_t u64() {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(u8()) << (8 * i);
    return v;
  }
  double f64() { return std::bit_cast<double>(u64()); }

  Reader section() {
    const std::uint64_t len = u64();
    if (len > data_.size() - pos_) corrupt("section runs past end of file");
    return Reader(bytes(static_cast<std::size_t>(len)));
  }

  bool at_end() const { return pos_ == data_.size(); }
  std::size_t remaining() const { return data_.size() - pos_; }

  [[noreturn]] static void corrupt(const std::string& what) {
    throw Error(ErrorCode::kCorrupt, "model file: " + what);
  }

 private:
  void need(std::size_t n) const {
    if (n > data_.size() - pos_) corrupt("truncated");
  }

  std::string_view data_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string serialize_model(const LinearModel& model) {
  Writer w;
  w.bytes(kMagic);
  w.u32(kModelFormatVersion);

  Writer header;
  header.u32(model.feature_space_size);
  header.u32(model.template_version);
  header.u64(model.seed);
  header.u32(model.epochs);
  w.section(header);

  Writer labels;
  labels.u32(kNumLabels);
  for (PunctLabel l : kTieOrder) labels.u8(static_cast<std::uint8_t>(to_char(l)));
  w.section(labels);

  std::vector<std::uint32_t> buckets;
  buckets.reserve(model.weights().size());
  for (const auto& [bucket, row] : model.weights()) buckets.push_back(bucket);
  std::sort(buckets.begin(), buckets.end());
  Writer triples;
  std::uint64_t count = 0;
  Writer body;
  for (std::uint32_t b : buckets) {
    const auto& row = model.weights().at(b);
    for (std::size_t l = 0; l < kNumLabels; ++l) {
      if (row[l] == 0.0) continue;
      body.u32(b);
      body.u8(static_cast<std::uint8_t>(l));
      body.f64(row[l]);
      ++count;
    }
  }
  triples.u64(count);
  triples.bytes(body.take());
  w.section(triples);
  return w.take();
}

LinearModel deserialize_model(std::string_view bytes) {
  if (bytes.size() < kMagic.size() || bytes.substr(0, kMagic.size()) != kMagic) {
    throw Error(ErrorCode::kBadMagic, "not a model file (expected FSLM header)");
  }
  Reader r(bytes.substr(kMagic.size()));
  const std::uint32_t version = r.u32();
  if (version != kModelFormatVersion) {
    throw Error(ErrorCode::kVersionMismatch,
                "model format version " + std::to_string(version) +
                    ", expected " + std::to_string(kModelFormatVersion));
  }

  LinearModel model;
  Reader header = r.section();
  model.feature_space_size = header.u32();
  model.template_version = header.u32();
  model.seed = header.u64();
  model.epochs = header.u32();
  if (!header.at_end()) Reader::corrupt("header section has trailing bytes");
  if (model.feature_space_size != kFeatureSpaceSize) {
    Reader::corrupt("unsupported feature space size " +
                    std::to_string(model.feature_space_size));
  }
  if (model.template_version != kFeatureTemplateVersion) {
    throw Error(ErrorCode::kVersionMismatch,
                "feature template version " +
                    std::to_string(model.template_version));
  }

  Reader labels = r.section();
  if (labels.u32() != kNumLabels) Reader::corrupt("label count");
  for (PunctLabel l : kTieOrder) {
    if (labels.u8() != static_cast<std::uint8_t>(to_char(l))) {
      Reader::corrupt("label list");
    }
  }
  if (!labels.at_end()) Reader::corrupt("label section has trailing bytes");

  Reader triples = r.section();
  const std::uint64_t count = triples.u64();
  constexpr std::size_t kTripleBytes = 4 + 1 + 8;
  if (count != triples.remaining() / kTripleBytes ||
      triples.remaining() % kTripleBytes != 0) {
    Reader::corrupt("weight section length disagrees with its count");
  }
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::uint32_t bucket = triples.u32();
    const std::uint8_t label = triples.u8();
    const double w = triples.f64();
    if (bucket >= model.feature_space_size || label >= kNumLabels) {
      Reader::corrupt("weight entry out of range");
    }
    model.set_weight(bucket, label_at(label), w);
  }
  if (!r.at_end()) Reader::corrupt("trailing bytes after last section");
  return model;
}

void save_model(const LinearModel& model, const std::filesystem::path& path) {
  write_file_atomic(path, serialize_model(model));
}

LinearModel load_model(const std::filesystem::path& path) {
  return deserialize_model(read_text_file(path));
}

}  // namespace punctseg
