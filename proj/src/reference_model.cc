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

#include "punctseg/reference_model.h"

#include <algorithm>
#include <bit>
#include <numeric>

#include "punctseg/error.h"
#include "punctseg/random.h"
#include "punctseg/textprep.h"

namespace punctseg {
namespace {

constexpr std::string_view kBos = "<s>";
constexpr std::string_view kEos = "</s>";

std::uint32_t bucket_of(std::string_view prefix, std::string_view value) {
  std::string key;
  key.reserve(prefix.size() + value.size());
  key.append(prefix);
  key.append(value);
  return static_cast<std::uint32_t>(fnv1a64(key) & (kFeatureSpaceSize - 1));
}

struct Example {
  std::vector<std::uint32_t> features;
  PunctLabel gold;

  auto operator<=>(const Example&) const = default;
};

// Running sums for lazy weight averaging.
struct AveragedRow {
  LinearModel::WeightRow current{};
  LinearModel::WeightRow total{};
  std::array<std::uint64_t, kNumLabels> since{};
};

class AveragedWeights {
 public:
  LinearModel::WeightRow scores(const std::vector<std::uint32_t>& features) const {
    LinearModel::WeightRow s{};
    for (std::uint32_t f : features) {
      auto it = rows_.find(f);
      if (it == rows_.end()) continue;
      for (std::size_t l = 0; l < kNumLabels; ++l) s[l] += it->second.current[l];
    }
    return s;
  }

  void add(std::uint32_t feature, PunctLabel label, double delta,
           std::uint64_t step) {
    AveragedRow& row = rows_[feature];
    const std::size_t l = index_of(label);
    row.total[l] += static_cast<double>(step - row.since[l]) * row.current[l];
    row.current[l] += delta;
    row.since[l] = step;
  }

  // The mean of the weight vectors held after each of the `steps` updates.
  void finalize_into(LinearModel& model, std::uint64_t steps) const {
    if (steps == 0) return;
    for (const auto& [feature, row] : rows_) {
      for (std::size_t l = 0; l < kNumLabels; ++l) {
        const double total =
            row.total[l] +
            static_cast<double>(steps + 1 - row.since[l]) * row.current[l];
        const double avg = total / static_cast<double>(steps);
        if (avg != 0.0) model.set_weight(feature, label_at(l), avg);
      }
    }
  }

 private:
  std::unordered_map<std::uint32_t, AveragedRow> rows_;
};

PunctLabel argmax(const LinearModel::WeightRow& scores) {
  std::size_t best = 0;
  for (std::size_t l = 1; l < kNumLabels; ++l) {
    if (scores[l] > scores[best]) best = l;
  }
  return label_at(best);
}

}  // namespace

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string word_shape(std::string_view word) {
  std::string shape;
  for (std::size_t i = 0; i < word.size(); ++i) {
    const auto c = static_cast<unsigned char>(word[i]);
    char sym;
    if (c >= 'A' && c <= 'Z') {
      sym = 'X';
    } else if (c >= 'a' && c <= 'z') {
      sym = 'x';
    } else if (c >= '0' && c <= '9') {
      sym = 'd';
    } else if (c >= 0x80) {
      sym = 'u';
      while (i + 1 < word.size() &&
             (static_cast<unsigned char>(word[i + 1]) & 0xC0) == 0x80) {
        ++i;
      }
    } else {
      sym = static_cast<char>(c);
    }
    if (shape.empty() || shape.back() != sym) shape.push_back(sym);
  }
  return shape;
}

std::vector<std::uint32_t> extract_features(WordSpan window,
                                            std::size_t position) {
  const std::string& word = window[position];
  const std::string_view prev = position > 0 ? std::string_view(window[position - 1]) : kBos;
  const std::string_view next =
      position + 1 < window.size() ? std::string_view(window[position + 1]) : kEos;
  const std::string_view next2 =
      position + 2 < window.size() ? std::string_view(window[position + 2]) : kEos;
  const bool last = position + 1 == window.size();
  return {
      bucket_of("w=", word),
      bucket_of("p=", prev),
      bucket_of("n=", next),
      bucket_of("nn=", next2),
      bucket_of("lw=", case_fold(word)),
      bucket_of("sh=", word_shape(word)),
      bucket_of("pos=", std::to_string(std::bit_width(position))),
      bucket_of("last=", last ? "1" : "0"),
  };
}

double LinearModel::weight(std::uint32_t bucket, PunctLabel label) const {
  auto it = weights_.find(bucket);
  return it == weights_.end() ? 0.0 : it->second[index_of(label)];
}

void LinearModel::set_weight(std::uint32_t bucket, PunctLabel label,
                             double value) {
  weights_[bucket][index_of(label)] = value;
}

LinearModel::WeightRow LinearModel::scores(
    const std::vector<std::uint32_t>& features) const {
  WeightRow s{};
  for (std::uint32_t f : features) {
    auto it = weights_.find(f);
    if (it == weights_.end()) continue;
    for (std::size_t l = 0; l < kNumLabels; ++l) s[l] += it->second[l];
  }
  return s;
}

PunctLabel LinearModel::predict(const std::vector<std::uint32_t>& features) const {
  return argmax(scores(features));
}

LinearModel train_reference(const std::vector<SeppDocument>& train,
                            const TrainOptions& options) {
  if (options.window_words == 0) {
    throw Error(ErrorCode::kInvalidArgument, "training window must be positive");
  }
  std::vector<Example> examples;
  for (const SeppDocument& doc : train) {
    const std::vector<std::string> words = strip_labels(doc);
    const WordSpan all(words);
    for (std::size_t start = 0; start < words.size();
         start += options.window_words) {
      const WordSpan window =
          all.subspan(start, std::min(options.window_words, words.size() - start));
      for (std::size_t i = 0; i < window.size(); ++i) {
        examples.push_back({extract_features(window, i),
                            doc.tokens[start + i].label});
      }
    }
  }
  if (examples.empty()) {
    throw Error(ErrorCode::kEmptyTrainingSet, "training documents hold no tokens");
  }
  // Canonical order first, so the seeded shuffle does not depend on the
  // order in which documents were supplied.
  std::sort(examples.begin(), examples.end());

  std::vector<std::size_t> order(examples.size());
  std::iota(order.begin(), order.end(), 0);
  Rng rng(options.seed);
  AveragedWeights weights;
  std::uint64_t step = 0;
  for (std::uint32_t epoch = 0; epoch < options.epochs; ++epoch) {
    shuffle_in_place(order, rng);
    for (std::size_t idx : order) {
      const Example& ex = examples[idx];
      ++step;
      const PunctLabel guess = argmax(weights.scores(ex.features));
      if (guess == ex.gold) continue;
      for (std::uint32_t f : ex.features) {
        weights.add(f, ex.gold, 1.0, step);
        weights.add(f, guess, -1.0, step);
      }
    }
  }

  LinearModel model;
  model.seed = options.seed;
  model.epochs = options.epochs;
  weights.finalize_into(model, step);
  return model;
}

LinearModel train_reference(const std::vector<SeppDocument>& train,
                            std::uint32_t epochs, std::uint64_t seed) {
  TrainOptions options;
  options.epochs = epochs;
  options.seed = seed;
  return train_reference(train, options);
}

std::vector<PunctLabel> classify_reference(const LinearModel& model,
                                           WordSpan window) {
  if (window.empty()) {
    throw Error(ErrorCode::kEmptyWindow, "cannot classify an empty window");
  }
  std::vector<PunctLabel> labels(window.size());
  for (std::size_t i = 0; i < window.size(); ++i) {
    labels[i] = model.predict(extract_features(window, i));
  }
  return labels;
}

}  // namespace punctseg
