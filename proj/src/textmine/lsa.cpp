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

#include "mab/textmine/topics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mab/common/error.hpp"

namespace mab::textmine {

std::string_view method_name(TopicMethod m) { return m == TopicMethod::kLsa ? "lsa" : "lda"; }

std::vector<std::string> TopicSet::labels() const {
  std::vector<std::string> out;
  out.reserve(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) out.push_back(label(i));
  return out;
}

std::vector<std::size_t> top_by_magnitude(std::span<const double> weights, std::size_t m) {
  std::vector<long long> key(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) key[i] = std::llround(std::abs(weights[i]) / kTieQuantum);
  std::vector<std::size_t> idx(weights.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  const std::size_t n = std::min(m, idx.size());
  std::partial_sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(n), idx.end(),
                    [&](std::size_t a, std::size_t b) { return key[a] != key[b] ? key[a] > key[b] : a < b; });
  idx.resize(n);
  return idx;
}

std::vector<std::size_t> LsaModel::assign(const SparseVector& doc, std::size_t t) const {
  std::vector<double> proj(svd.size(), 0.0);
  for (std::size_t j = 0; j < svd.size(); ++j) {
    const auto vj = svd.right(j);
    for (const auto& [col, w] : doc) proj[j] += w * vj[col];
  }
  auto ranked = top_by_magnitude(proj, t);
  std::erase_if(ranked, [&](std::size_t j) { return std::llround(std::abs(proj[j]) / kTieQuantum) == 0; });
  return ranked;
}

LsaModel lsa_fit(const TfidfModel& model, std::size_t k, std::size_t m) {
  if (k == 0) throw ConfigError("LSA needs k >= 1");
  if (m == 0) throw ConfigError("topics need at least one term");
  const auto a = model.dense();
  LsaModel out;
  out.svd = truncated_svd(a, model.n_docs, model.vocab_size(), k);
  if (out.svd.size() == 0) throw DataError("TF-IDF matrix is all zero");
  out.topics.method = TopicMethod::kLsa;
  out.topics.truncated = out.svd.size() < k;

  const std::size_t rows = out.svd.rows;
  const std::size_t cols = out.svd.cols;
  for (std::size_t j = 0; j < out.svd.size(); ++j) {
    const auto lead = top_by_magnitude(out.svd.right(j), 1).front();
    if (out.svd.v[j * cols + lead] < 0.0) {
      for (std::size_t i = 0; i < cols; ++i) out.svd.v[j * cols + i] = -out.svd.v[j * cols + i];
      for (std::size_t i = 0; i < rows; ++i) out.svd.u[j * rows + i] = -out.svd.u[j * rows + i];
    }
    std::vector<std::string> terms;
    for (std::size_t col : top_by_magnitude(out.svd.right(j), m)) terms.push_back(model.vocabulary[col]);
    out.topics.terms.push_back(std::move(terms));
  }
  return out;
}

TopicSet lsa_topics(const TfidfModel& model, std::size_t k, std::size_t m) { return lsa_fit(model, k, m).topics; }

}  // namespace mab::textmine
