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
#include <unordered_map>
#include <utility>
#include <vector>

#include "mab/common/text.hpp"

namespace mab::textmine {

// Case-folded alphanumeric tokens, minus stopwords and tokens shorter than two characters.
std::vector<std::string> tokenize(std::string_view text, const text::WordSet& stopwords);

using SparseVector = std::vector<std::pair<std::size_t, double>>;

// Smoothed TF-IDF: idf(t) = ln((1+N)/(1+df(t))) + 1, raw term counts, L2-normalized rows.
struct TfidfModel {
  std::vector<std::string> vocabulary;  // lexicographic; index = column
  std::unordered_map<std::string, std::size_t> column;
  std::vector<std::size_t> df;
  std::vector<double> idf;
  std::vector<SparseVector> doc_vectors;  // one per input doc, sorted by column
  std::size_t n_docs = 0;
  text::WordSet stopwords;

  std::size_t vocab_size() const { return vocabulary.size(); }

  // Projects new text into the model's space (unknown terms dropped, L2-normalized).
  SparseVector transform(std::string_view text) const;

  // Row-major n_docs x vocab_size matrix of doc_vectors.
  std::vector<double> dense() const;
};

// Throws DataError if docs is empty or no term survives tokenization and min_df.
TfidfModel build_tfidf(const std::vector<std::string>& docs, std::size_t min_df, const text::WordSet& stopwords);

}  // namespace mab::textmine
