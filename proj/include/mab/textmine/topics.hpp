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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mab/common/text.hpp"
#include "mab/textmine/svd.hpp"
#include "mab/textmine/tfidf.hpp"

namespace mab::textmine {

enum class TopicMethod { kLsa, kLda };

std::string_view method_name(TopicMethod m);

// Ordered topics; each label is its top terms joined by a single space.
struct TopicSet {
  TopicMethod method = TopicMethod::kLsa;
  std::vector<std::vector<std::string>> terms;
  // Set when fewer topics than requested could be produced (rank-deficient input).
  bool truncated = false;

  std::size_t size() const { return terms.size(); }
  std::string label(std::size_t i) const { return text::join(terms[i], " "); }
  std::vector<std::string> labels() const;

  friend bool operator==(const TopicSet&, const TopicSet&) = default;
};

// Magnitudes within this quantum compare equal; ties then fall to lexicographic order.
inline constexpr double kTieQuantum = 1e-10;

// Indices of the m largest |weights| (quantized), ties by ascending index.
std::vector<std::size_t> top_by_magnitude(std::span<const double> weights, std::size_t m);

struct LsaModel {
  TopicSet topics;
  // Sign-normalized: the largest-|loading| term of each component is positive.
  TruncatedSvd svd;

  // Topic indices ranked by |projection of `doc` onto each component|, ties by index,
  // zero projections dropped, at most t.
  std::vector<std::size_t> assign(const SparseVector& doc, std::size_t t) const;
};

LsaModel lsa_fit(const TfidfModel& model, std::size_t k, std::size_t m);
TopicSet lsa_topics(const TfidfModel& model, std::size_t k, std::size_t m);

struct LdaParams {
  std::size_t k = 10;
  std::size_t m = 5;
  std::uint64_t seed = 42;
  std::size_t iters = 500;
  // Unset: 50 / k.
  std::optional<double> alpha;
  double beta = 0.01;

  friend bool operator==(const LdaParams&, const LdaParams&) = default;
};

struct LdaModel {
  TopicSet topics;
  std::vector<std::string> vocabulary;
  std::vector<std::vector<std::uint32_t>> topic_word;  // k x V
  std::vector<std::uint32_t> topic_total;
  std::vector<std::vector<std::uint32_t>> doc_topic;  // docs x k
  double alpha = 0.0;
  double beta = 0.0;
  text::WordSet stopwords;

  // phi(t, w) = (n_tw + beta) / (n_t + V beta)
  double phi(std::size_t topic, std::size_t word) const;

  // Topics ranked by summed phi over the text's known tokens, ties by index, at most t.
  std::vector<std::size_t> assign(std::string_view text, std::size_t t) const;
};

// Collapsed Gibbs sampling. Deterministic for a given seed; the RNG is local to the call.
// Throws DataError if no document has a token.
LdaModel lda_fit(const std::vector<std::string>& docs, const LdaParams& params, const text::WordSet& stopwords);
TopicSet lda_topics(const std::vector<std::string>& docs, const LdaParams& params, const text::WordSet& stopwords);

}  // namespace mab::textmine
