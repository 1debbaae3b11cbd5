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

#include "mab/textmine/tfidf.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "mab/common/error.hpp"

namespace mab::textmine {

namespace {

void normalize(SparseVector& v) {
  double sq = 0.0;
  for (const auto& [_, w] : v) sq += w * w;
  if (sq <= 0.0) return;
  const double inv = 1.0 / std::sqrt(sq);
  for (auto& [_, w] : v) w *= inv;
}

SparseVector weigh(const std::vector<std::string>& tokens, const TfidfModel& m) {
  std::map<std::size_t, double> counts;
  for (const auto& t : tokens) {
    if (auto it = m.column.find(t); it != m.column.end()) counts[it->second] += 1.0;
  }
  SparseVector v;
  v.reserve(counts.size());
  for (const auto& [col, tf] : counts) v.emplace_back(col, tf * m.idf[col]);
  normalize(v);
  return v;
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text, const text::WordSet& stopwords) {
  auto tokens = text::words(text);
  std::erase_if(tokens, [&](const std::string& t) { return t.size() < 2 || stopwords.contains(t); });
  return tokens;
}

SparseVector TfidfModel::transform(std::string_view text) const { return weigh(tokenize(text, stopwords), *this); }

std::vector<double> TfidfModel::dense() const {
  std::vector<double> out(n_docs * vocab_size(), 0.0);
  for (std::size_t d = 0; d < n_docs; ++d) {
    for (const auto& [col, w] : doc_vectors[d]) out[d * vocab_size() + col] = w;
  }
  return out;
}

TfidfModel build_tfidf(const std::vector<std::string>& docs, std::size_t min_df, const text::WordSet& stopwords) {
  if (docs.empty()) throw DataError("TF-IDF needs at least one document");
  std::vector<std::vector<std::string>> tokenized;
  tokenized.reserve(docs.size());
  std::map<std::string, std::size_t> df;
  for (const auto& d : docs) {
    tokenized.push_back(tokenize(d, stopwords));
    for (const auto& t : std::set<std::string>(tokenized.back().begin(), tokenized.back().end())) ++df[t];
  }

  TfidfModel m;
  m.n_docs = docs.size();
  m.stopwords = stopwords;
  const double n = static_cast<double>(docs.size());
  for (const auto& [term, count] : df) {
    if (count < min_df) continue;
    m.column.emplace(term, m.vocabulary.size());
    m.vocabulary.push_back(term);
    m.df.push_back(count);
    m.idf.push_back(std::log((1.0 + n) / (1.0 + static_cast<double>(count))) + 1.0);
  }
  if (m.vocabulary.empty()) throw DataError("every document is empty after tokenization");
  m.doc_vectors.reserve(tokenized.size());
  for (const auto& tokens : tokenized) m.doc_vectors.push_back(weigh(tokens, m));
  return m;
}

}  // namespace mab::textmine
