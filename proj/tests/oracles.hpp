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

// Independent reference implementations shared by the unit and acceptance tests.

#include <Eigen/Dense>
#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mab/common/text.hpp"
#include "mab/textmine/topics.hpp"
#include "mab/vectors/embedding.hpp"
#include "mab/vectors/index.hpp"
#include "support.hpp"

namespace mab::oracle {

using textmine::kTieQuantum;
using vectors::EmbeddingVector;
using vectors::SearchHit;

inline std::vector<std::string> read_lines(const std::string& name) {
  std::ifstream in(testkit::data_dir() / name);
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

inline Eigen::MatrixXd to_eigen(const std::vector<double>& a, std::size_t rows, std::size_t cols) {
  Eigen::MatrixXd m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = a[r * cols + c];
  return m;
}

// The documented labelling rule applied to an arbitrary right singular vector: flip so
// the largest quantized |loading| (lowest index on ties) is positive, then take the m
// largest quantized magnitudes, ties by index. Uses a full sort.
inline std::vector<std::string> oracle_label(Eigen::VectorXd v, const std::vector<std::string>& vocab, std::size_t m) {
  std::vector<std::size_t> idx(v.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  const auto q = [&](std::size_t i) { return std::llround(std::abs(v[i]) / kTieQuantum); };
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return q(a) != q(b) ? q(a) > q(b) : a < b; });
  std::vector<std::string> out;
  for (std::size_t i = 0; i < std::min(m, idx.size()); ++i) out.push_back(vocab[idx[i]]);
  return out;
}

// All 1..n-grams with usable edge tokens, scored by cosine to the doc, best first,
// ties by phrase. Every candidate is embedded on its own.
inline std::vector<std::pair<std::string, double>> oracle_keyphrases(const std::string& doc, std::size_t ngram_max,
                                                              std::size_t top_n, std::size_t dim) {
  const auto& stop = text::english_stopwords();
  std::vector<std::string> toks;
  std::string cur;
  for (char ch : doc + " ") {
    const auto u = static_cast<unsigned char>(ch);
    if (u < 0x80 && std::isalnum(u)) {
      cur += static_cast<char>(std::tolower(u));
    } else if (!cur.empty()) {
      toks.push_back(cur);
      cur.clear();
    }
  }
  const auto edge_ok = [&](const std::string& t) { return t.size() >= 2 && !stop.contains(t); };
  std::set<std::string> cands;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    std::string phrase;
    for (std::size_t n = 1; n <= ngram_max && i + n <= toks.size(); ++n) {
      phrase += (n > 1 ? " " : "") + toks[i + n - 1];
      if (edge_ok(toks[i]) && edge_ok(toks[i + n - 1])) cands.insert(phrase);
    }
  }
  const auto dv = vectors::hash_embed(doc, dim);
  std::vector<std::pair<std::string, double>> scored;
  for (const auto& c : cands) scored.emplace_back(c, vectors::cosine(vectors::hash_embed(c, dim), dv));
  std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  if (scored.size() > top_n) scored.resize(top_n);
  return scored;
}

// Independent scan: plain loops, full sort.
inline std::vector<SearchHit> oracle_search(const std::vector<std::pair<std::string, EmbeddingVector>>& entries,
                                     const EmbeddingVector& q, std::size_t k) {
  std::vector<SearchHit> all;
  for (const auto& [id, v] : entries) {
    long double s = 0;
    for (std::size_t i = 0; i < v.dim(); ++i) s += static_cast<long double>(v.values()[i]) * q.values()[i];
    all.push_back({id, static_cast<double>(s)});
  }
  std::sort(all.begin(), all.end(), [](const SearchHit& a, const SearchHit& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.dataset_id < b.dataset_id;
  });
  all.resize(std::min(k, all.size()));
  return all;
}

// Hit@k and MRR by counting, one pass per metric. Ranks past 5 add no reciprocal rank.
struct Counts {
  double hit1, hit3, hit5, mrr;
};

inline Counts brute_metrics(const std::vector<std::optional<int>>& ranks) {
  const auto n = static_cast<double>(ranks.size());
  const auto hit = [&](int k) {
    std::size_t c = 0;
    for (const auto& r : ranks) c += (r && *r <= k) ? 1 : 0;
    return static_cast<double>(c) / n;
  };
  double rr = 0;
  for (const auto& r : ranks) {
    if (r && *r <= 5) rr += 1.0 / *r;
  }
  return {hit(1), hit(3), hit(5), rr / n};
}

}  // namespace mab::oracle
