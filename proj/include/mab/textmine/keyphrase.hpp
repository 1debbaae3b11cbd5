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
#include <string>
#include <string_view>
#include <vector>

#include "mab/common/text.hpp"
#include "mab/vectors/embedding.hpp"

namespace mab::textmine {

struct Keyphrase {
  std::string text;
  double score = 0.0;  // cosine to the whole document, in [-1, 1]

  friend bool operator==(const Keyphrase&, const Keyphrase&) = default;
};

// Non-increasing scores, ties by phrase text; phrases are case-folded and distinct.
using KeyphraseSet = std::vector<Keyphrase>;

struct KeyphraseParams {
  std::size_t top_n = 10;
  std::size_t ngram_max = 2;
  // 1 = pure similarity ranking; lower values trade relevance for diversity.
  double mmr_lambda = 0.5;

  friend bool operator==(const KeyphraseParams&, const KeyphraseParams&) = default;
};

// Distinct 1..ngram_max-grams over the case-folded tokens of `doc` whose first and last
// tokens are neither stopwords nor single characters. Lexicographic order.
std::vector<std::string> keyphrase_candidates(std::string_view doc, std::size_t ngram_max,
                                              const text::WordSet& stopwords);

// Embedding-similarity keyphrases with optional maximal-marginal-relevance selection.
// Embedder errors propagate.
KeyphraseSet extract_keyphrases(std::string_view doc, vectors::Embedder& embedder, const KeyphraseParams& params,
                                const text::WordSet& stopwords);

}  // namespace mab::textmine
