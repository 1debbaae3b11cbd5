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
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "mab/vectors/embedding.hpp"

namespace mab::vectors {

struct SearchParams {
  std::size_t k = 5;
};

struct SearchHit {
  std::string dataset_id;
  double score = 0.0;

  friend bool operator==(const SearchHit&, const SearchHit&) = default;
};

// Exact cosine index over unit vectors, stored as one contiguous row-major matrix.
// Immutable once built.
class VectorIndex {
 public:
  // Throws DataError on duplicate ids, zero-sentinel vectors or mixed dimensions.
  static VectorIndex from_vectors(std::vector<std::pair<std::string, EmbeddingVector>> entries);

  std::size_t size() const { return ids_.size(); }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& ids() const { return ids_; }
  std::span<const double> row(std::size_t i) const { return {matrix_.data() + i * dim_, dim_}; }

  // Exhaustive scan; cosine descending, ties by ascending id, min(k, size) results.
  std::vector<SearchHit> search(const EmbeddingVector& query, const SearchParams& params) const;

  // JSONL: a {"format","version","dim","count"} header line, then {"id","dim","values"} per entry.
  void save(const std::filesystem::path& path) const;
  static VectorIndex load(const std::filesystem::path& path);

 private:
  std::vector<std::string> ids_;
  std::vector<double> matrix_;
  std::size_t dim_ = 0;
};

struct IndexItem {
  std::string dataset_id;
  std::string text;
};

struct IndexBuild {
  VectorIndex index;
  // Items that can never be retrieved: blank text, or text with no embeddable features.
  std::vector<std::string> excluded;
};

// Throws DataError on duplicate ids or when every item is excluded.
IndexBuild build_index(const std::vector<IndexItem>& items, Embedder& embedder);

// Throws DataError for the zero-sentinel query or k == 0, DimensionMismatch on dim mismatch.
std::vector<SearchHit> search_topk(const VectorIndex& index, const EmbeddingVector& query, const SearchParams& params);

}  // namespace mab::vectors
