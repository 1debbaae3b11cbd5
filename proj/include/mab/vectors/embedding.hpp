// Copyright 2026 The mab Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except in compliance
// with the License. You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software distributed under the License
// is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express
// or implied. See the License for the specific language governing permissions and limitations under the License.

#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace mab::vectors {

// Unit-length embedding, or the all-zero sentinel produced for empty text.
class EmbeddingVector {
 public:
  EmbeddingVector() = default;

  static EmbeddingVector zero(std::size_t dim);
  // L2-normalizes `raw`; an all-zero input yields the zero sentinel.
  static EmbeddingVector normalized(std::vector<double> raw);

  std::span<const double> values() const { return values_; }
  std::size_t dim() const { return values_.size(); }
  bool is_zero() const { return zero_; }

  friend bool operator==(const EmbeddingVector&, const EmbeddingVector&) = default;

 private:
  std::vector<double> values_;
  bool zero_ = true;
};

double cosine(const EmbeddingVector& a, const EmbeddingVector& b);

class Embedder {
 public:
  virtual ~Embedder() = default;
  virtual std::size_t dim() const = 0;
  // One vector per text, in order. Blank texts map to the zero sentinel.
  virtual std::vector<EmbeddingVector> embed(std::span<const std::string> texts) = 0;
};

inline constexpr std::size_t kDefaultHashDim = 256;

// Signed feature-hashing counts before normalization. Features are the case-folded word
// unigrams plus the character trigrams of each word padded with one space on both sides.
std::vector<double> hash_accumulate(std::string_view text, std::size_t dim, std::uint64_t seed);

// Requires dim >= 8.
EmbeddingVector hash_embed(std::string_view text, std::size_t dim = kDefaultHashDim, std::uint64_t seed = 0);

class HashEmbedder final : public Embedder {
 public:
  explicit HashEmbedder(std::size_t dim = kDefaultHashDim, std::uint64_t seed = 0);
  std::size_t dim() const override { return dim_; }
  std::vector<EmbeddingVector> embed(std::span<const std::string> texts) override;

 private:
  std::size_t dim_;
  std::uint64_t seed_;
};

struct RemoteEmbedderConfig {
  std::string endpoint;
  std::string api_key_env = "MAB_EMBED_API_KEY";
  // 0 = adopt the dimension of the first response.
  std::size_t dim = 0;
  std::size_t batch_size = 64;
  int max_retries = 3;
  std::chrono::milliseconds timeout{30000};
  std::chrono::milliseconds backoff{500};
};

// POST {"texts":[...]} -> {"vectors":[[...],...]}.
class RemoteEmbedder final : public Embedder {
 public:
  explicit RemoteEmbedder(RemoteEmbedderConfig config);
  std::size_t dim() const override { return dim_; }
  std::vector<EmbeddingVector> embed(std::span<const std::string> texts) override;

 private:
  RemoteEmbedderConfig config_;
  std::size_t dim_;
};

// Embeds a non-empty list of texts (throws DataError on an empty list).
std::vector<EmbeddingVector> embed_texts(std::span<const std::string> texts, Embedder& embedder);

}  // namespace mab::vectors
