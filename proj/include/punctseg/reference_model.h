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

#ifndef PUNCTSEG_REFERENCE_MODEL_H_
#define PUNCTSEG_REFERENCE_MODEL_H_

// Averaged-perceptron token classifier over hashed sparse features.
//
// Features of the word at position i of a window:
//   w=<word>  p=<previous word>  n=<next word>  nn=<word after next>
//   lw=<case-folded word>  sh=<word shape>  pos=<bit_width(i)>
//   last=<1 if i is the final position, else 0>
// Out-of-window neighbours are "<s>" / "</s>". Each feature string is hashed
// with 64-bit FNV-1a and masked into 2^20 buckets.

#include <array>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "punctseg/classifier.h"
#include "punctseg/label.h"
#include "punctseg/sepp.h"

namespace punctseg {

inline constexpr std::uint32_t kFeatureSpaceBits = 20;
inline constexpr std::uint32_t kFeatureSpaceSize = 1u << kFeatureSpaceBits;
inline constexpr std::uint32_t kFeatureTemplateVersion = 1;

std::uint64_t fnv1a64(std::string_view bytes);

// Capitals -> X, lower-case -> x, digits -> d, any non-ASCII character -> u,
// everything else kept; runs of the same symbol collapse to one.
std::string word_shape(std::string_view word);

// Bucket indices of the active features at `position`, in template order.
std::vector<std::uint32_t> extract_features(WordSpan window,
                                            std::size_t position);

class LinearModel {
 public:
  using WeightRow = std::array<double, kNumLabels>;

  LinearModel() = default;

  const std::unordered_map<std::uint32_t, WeightRow>& weights() const {
    return weights_;
  }
  double weight(std::uint32_t bucket, PunctLabel label) const;
  void set_weight(std::uint32_t bucket, PunctLabel label, double value);

  WeightRow scores(const std::vector<std::uint32_t>& features) const;
  // Argmax; on equal scores the earlier label in tie order wins.
  PunctLabel predict(const std::vector<std::uint32_t>& features) const;

  std::uint32_t feature_space_size = kFeatureSpaceSize;
  std::uint32_t template_version = kFeatureTemplateVersion;
  std::uint64_t seed = 0;
  std::uint32_t epochs = 0;

  bool operator==(const LinearModel&) const = default;

 private:
  std::unordered_map<std::uint32_t, WeightRow> weights_;
};

struct TrainOptions {
  std::uint32_t epochs = 5;
  std::uint64_t seed = 0;
  // Documents are cut into consecutive windows of this many words, so the
  // position features see the same geometry as at inference time.
  std::size_t window_words = 200;
};

// Throws EMPTY_TRAINING_SET when the documents hold no tokens.
LinearModel train_reference(const std::vector<SeppDocument>& train,
                            const TrainOptions& options);
LinearModel train_reference(const std::vector<SeppDocument>& train,
                            std::uint32_t epochs, std::uint64_t seed);

// Throws EMPTY_WINDOW.
std::vector<PunctLabel> classify_reference(const LinearModel& model,
                                           WordSpan window);

class ReferenceClassifier : public Classifier {
 public:
  explicit ReferenceClassifier(std::shared_ptr<const LinearModel> model)
      : model_(std::move(model)) {}

  std::vector<PunctLabel> classify(WordSpan window) const override {
    return classify_reference(*model_, window);
  }
  std::string name() const override { return "builtin"; }

  const LinearModel& model() const { return *model_; }

 private:
  std::shared_ptr<const LinearModel> model_;
};

// Binary model file, little-endian:
//   "FSLM" | u32 version |
//   u64 len | u32 feature_space_size, u32 template_version, u64 seed, u32 epochs
//   u64 len | u32 n_labels, n_labels label characters
//   u64 len | u64 n_triples, n_triples * (u32 bucket, u8 label, f64 weight)
inline constexpr std::uint32_t kModelFormatVersion = 1;

std::string serialize_model(const LinearModel& model);
// Throws BAD_MAGIC, VERSION_MISMATCH or CORRUPT.
LinearModel deserialize_model(std::string_view bytes);
void save_model(const LinearModel& model, const std::filesystem::path& path);
LinearModel load_model(const std::filesystem::path& path);

}  // namespace punctseg

#endif  // PUNCTSEG_REFERENCE_MODEL_H_
