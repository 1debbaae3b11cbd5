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

#include "mab/textmine/keyphrase.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include "mab/common/error.hpp"

namespace mab::textmine {

namespace {

bool usable_edge(const std::string& tok, const text::WordSet& stopwords) {
  return tok.size() >= 2 && !stopwords.contains(tok);
}

double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }

}  // namespace

std::vector<std::string> keyphrase_candidates(std::string_view doc, std::size_t ngram_max,
                                              const text::WordSet& stopwords) {
  const auto tokens = text::words(doc);
  std::set<std::string> out;
  for (std::size_t n = 1; n <= ngram_max; ++n) {
    for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
      if (!usable_edge(tokens[i], stopwords) || !usable_edge(tokens[i + n - 1], stopwords)) continue;
      std::string phrase = tokens[i];
      for (std::size_t j = i + 1; j < i + n; ++j) phrase += " " + tokens[j];
      out.insert(std::move(phrase));
    }
  }
  return {out.begin(), out.end()};
}

KeyphraseSet extract_keyphrases(std::string_view doc, vectors::Embedder& embedder, const KeyphraseParams& params,
                                const text::WordSet& stopwords) {
  if (params.mmr_lambda < 0.0 || params.mmr_lambda > 1.0) throw ConfigError("mmr_lambda must lie in [0, 1]");
  if (params.top_n == 0) return {};
  const auto candidates = keyphrase_candidates(doc, params.ngram_max, stopwords);
  if (candidates.empty()) return {};

  std::vector<std::string> texts;
  texts.reserve(candidates.size() + 1);
  texts.emplace_back(doc);
  texts.insert(texts.end(), candidates.begin(), candidates.end());
  const auto vecs = embedder.embed(texts);
  const auto& doc_vec = vecs[0];

  const std::size_t n = candidates.size();
  std::vector<double> relevance(n);
  for (std::size_t i = 0; i < n; ++i) relevance[i] = clamp_unit(vectors::cosine(vecs[i + 1], doc_vec));

  // Candidates are already lexicographic, so a stable sort by score leaves ties in text order.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return relevance[a] > relevance[b]; });

  std::vector<std::size_t> chosen;
  const std::size_t want = std::min(params.top_n, n);
  if (params.mmr_lambda >= 1.0) {
    chosen.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(want));
  } else {
    const double lambda = params.mmr_lambda;
    std::vector<bool> taken(n, false);
    std::vector<double> max_sim(n, -std::numeric_limits<double>::infinity());
    chosen.push_back(order.front());
    taken[order.front()] = true;
    while (chosen.size() < want) {
      const auto& last = vecs[chosen.back() + 1];
      std::size_t best = n;
      double best_score = -std::numeric_limits<double>::infinity();
      for (std::size_t c : order) {
        if (taken[c]) continue;
        max_sim[c] = std::max(max_sim[c], vectors::cosine(vecs[c + 1], last));
        const double mmr = lambda * relevance[c] - (1.0 - lambda) * max_sim[c];
        if (mmr > best_score) {
          best_score = mmr;
          best = c;
        }
      }
      chosen.push_back(best);
      taken[best] = true;
    }
    std::stable_sort(chosen.begin(), chosen.end(), [&](std::size_t a, std::size_t b) {
      if (relevance[a] != relevance[b]) return relevance[a] > relevance[b];
      return candidates[a] < candidates[b];
    });
  }

  KeyphraseSet out;
  out.reserve(chosen.size());
  for (std::size_t c : chosen) out.push_back({candidates[c], relevance[c]});
  return out;
}

}  // namespace mab::textmine
