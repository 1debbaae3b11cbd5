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

#include "mab/vectors/embedding.hpp"

#include <cmath>

#include <json.hpp>

#include "mab/common/error.hpp"
#include "mab/common/http.hpp"
#include "mab/common/retry.hpp"
#include "mab/common/text.hpp"
#include "mab/vectors/kernels.hpp"

namespace mab::vectors {

namespace {

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void add_feature(std::vector<double>& acc, std::string_view feature, std::uint64_t seed) {
  const std::uint64_t h = mix64(fnv1a(feature) ^ mix64(seed));
  const double sign = (h >> 63) ? -1.0 : 1.0;
  acc[h % acc.size()] += sign;
}

}  // namespace

EmbeddingVector EmbeddingVector::zero(std::size_t dim) {
  EmbeddingVector v;
  v.values_.assign(dim, 0.0);
  v.zero_ = true;
  return v;
}

EmbeddingVector EmbeddingVector::normalized(std::vector<double> raw) {
  const auto& k = simd::active();
  const double norm = std::sqrt(k.dot(raw.data(), raw.data(), raw.size()));
  EmbeddingVector v;
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    v.values_.assign(raw.size(), 0.0);
    v.zero_ = true;
    return v;
  }
  k.scale(raw.data(), raw.size(), 1.0 / norm);
  v.values_ = std::move(raw);
  v.zero_ = false;
  return v;
}

double cosine(const EmbeddingVector& a, const EmbeddingVector& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("cosine of vectors with different dimensions");
  if (a.is_zero() || b.is_zero()) return 0.0;
  return simd::dot(a.values(), b.values());
}

std::vector<double> hash_accumulate(std::string_view text, std::size_t dim, std::uint64_t seed) {
  std::vector<double> acc(dim, 0.0);
  for (const auto& w : text::words(text)) {
    add_feature(acc, "w:" + w, seed);
    const std::string padded = " " + w + " ";
    for (std::size_t i = 0; i + 3 <= padded.size(); ++i) add_feature(acc, "c:" + padded.substr(i, 3), seed);
  }
  return acc;
}

EmbeddingVector hash_embed(std::string_view text, std::size_t dim, std::uint64_t seed) {
  if (dim < 8) throw ConfigError("hash embedding dimension must be at least 8");
  return EmbeddingVector::normalized(hash_accumulate(text, dim, seed));
}

HashEmbedder::HashEmbedder(std::size_t dim, std::uint64_t seed) : dim_(dim), seed_(seed) {
  if (dim < 8) throw ConfigError("hash embedding dimension must be at least 8");
}

std::vector<EmbeddingVector> HashEmbedder::embed(std::span<const std::string> texts) {
  std::vector<EmbeddingVector> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(hash_embed(t, dim_, seed_));
  return out;
}

RemoteEmbedder::RemoteEmbedder(RemoteEmbedderConfig config) : config_(std::move(config)), dim_(config_.dim) {
  http::split_url(config_.endpoint);
  if (config_.batch_size == 0) throw ConfigError("embedding batch size must be positive");
  if (config_.timeout.count() <= 0) throw ConfigError("embedding timeout must be positive");
}

std::vector<EmbeddingVector> RemoteEmbedder::embed(std::span<const std::string> texts) {
  std::vector<EmbeddingVector> out(texts.size());
  std::vector<std::size_t> pending;
  for (std::size_t i = 0; i < texts.size(); ++i) {
    if (!text::is_blank(texts[i])) pending.push_back(i);
  }
  http::Headers headers;
  http::add_bearer_from_env(headers, config_.api_key_env);
  const RetryPolicy policy{config_.max_retries, config_.backoff};

  for (std::size_t start = 0; start < pending.size(); start += config_.batch_size) {
    const std::size_t end = std::min(pending.size(), start + config_.batch_size);
    nlohmann::json body = {{"texts", nlohmann::json::array()}};
    for (std::size_t p = start; p < end; ++p) body["texts"].push_back(texts[pending[p]]);
    const std::string payload = body.dump();
    const auto describe_batch = [&] {
      std::string ids;
      for (std::size_t p = start; p < end; ++p) ids += (p > start ? "," : "") + std::to_string(pending[p]);
      return "embedding batch [" + ids + "]";
    };

    nlohmann::json reply;
    try {
      reply = retry_call(policy, [&](int) {
        const auto res = http::post_json(config_.endpoint, payload, headers, config_.timeout);
        if (res.status < 200 || res.status >= 300) {
          throw BackendError("embedding endpoint returned HTTP " + std::to_string(res.status), res.status,
                             http::is_transient_status(res.status));
        }
        try {
          return nlohmann::json::parse(res.body);
        } catch (const nlohmann::json::parse_error&) {
          throw BackendError("embedding endpoint returned malformed JSON", res.status, false);
        }
      });
    } catch (const BackendError& e) {
      throw BackendError(describe_batch() + " failed: " + e.what(), e.status(), false);
    }

    const auto vecs = reply.find("vectors");
    if (vecs == reply.end() || !vecs->is_array() || vecs->size() != end - start) {
      throw BackendError(describe_batch() + ": response lacks one vector per text");
    }
    for (std::size_t p = start; p < end; ++p) {
      const auto& jv = (*vecs)[p - start];
      if (!jv.is_array()) throw BackendError(describe_batch() + ": vector is not an array");
      std::vector<double> raw;
      raw.reserve(jv.size());
      for (const auto& x : jv) {
        if (!x.is_number()) throw BackendError(describe_batch() + ": non-numeric vector entry");
        raw.push_back(x.get<double>());
      }
      if (dim_ == 0) dim_ = raw.size();
      if (raw.size() != dim_) {
        throw DimensionMismatch("embedding endpoint returned dimension " + std::to_string(raw.size()) +
                                " for text " + std::to_string(pending[p]) + ", expected " + std::to_string(dim_));
      }
      out[pending[p]] = EmbeddingVector::normalized(std::move(raw));
    }
  }
  if (dim_ == 0) throw BackendError("embedding dimension unknown: no non-blank text was embedded");
  for (std::size_t i = 0; i < texts.size(); ++i) {
    if (text::is_blank(texts[i])) out[i] = EmbeddingVector::zero(dim_);
  }
  return out;
}

std::vector<EmbeddingVector> embed_texts(std::span<const std::string> texts, Embedder& embedder) {
  if (texts.empty()) throw DataError("nothing to embed");
  return embedder.embed(texts);
}

}  // namespace mab::vectors
