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

#include "mab/vectors/index.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "mab/common/error.hpp"
#include "mab/common/io.hpp"
#include "mab/common/text.hpp"
#include "mab/vectors/kernels.hpp"

namespace mab::vectors {

namespace {

constexpr const char* kIndexFormat = "mab-vector-index";
constexpr int kIndexVersion = 1;

}  // namespace

VectorIndex VectorIndex::from_vectors(std::vector<std::pair<std::string, EmbeddingVector>> entries) {
  VectorIndex index;
  std::unordered_set<std::string> seen;
  for (auto& [id, vec] : entries) {
    if (!seen.insert(id).second) throw DataError("duplicate id '" + id + "' in vector index");
    if (vec.is_zero()) throw DataError("zero vector for '" + id + "' cannot be indexed");
    if (index.ids_.empty()) {
      index.dim_ = vec.dim();
    } else if (vec.dim() != index.dim_) {
      throw DataError("vector for '" + id + "' has dimension " + std::to_string(vec.dim()) + ", index has " +
                      std::to_string(index.dim_));
    }
    index.ids_.push_back(id);
    index.matrix_.insert(index.matrix_.end(), vec.values().begin(), vec.values().end());
  }
  return index;
}

std::vector<SearchHit> VectorIndex::search(const EmbeddingVector& query, const SearchParams& params) const {
  if (params.k == 0) throw DataError("search k must be at least 1");
  if (query.is_zero()) throw DataError("cannot rank against the empty-text (zero) query vector");
  if (!ids_.empty() && query.dim() != dim_) {
    throw DimensionMismatch("query dimension " + std::to_string(query.dim()) + " != index dimension " +
                            std::to_string(dim_));
  }
  std::vector<double> scores(ids_.size());
  simd::active().dot_rows(matrix_.data(), ids_.size(), dim_, query.values().data(), scores.data());

  std::vector<std::size_t> order(ids_.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  const std::size_t k = std::min(params.k, order.size());
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k), order.end(),
                    [&](std::size_t a, std::size_t b) {
                      if (scores[a] != scores[b]) return scores[a] > scores[b];
                      return ids_[a] < ids_[b];
                    });
  std::vector<SearchHit> hits;
  hits.reserve(k);
  for (std::size_t i = 0; i < k; ++i) hits.push_back({ids_[order[i]], scores[order[i]]});
  return hits;
}

void VectorIndex::save(const std::filesystem::path& path) const {
  std::ostringstream os;
  os << nlohmann::json{{"format", kIndexFormat}, {"version", kIndexVersion}, {"dim", dim_}, {"count", ids_.size()}}
            .dump()
     << '\n';
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    const auto r = row(i);
    os << nlohmann::json{{"id", ids_[i]}, {"dim", dim_}, {"values", std::vector<double>(r.begin(), r.end())}}.dump()
       << '\n';
  }
  io::write_file(path, os.str());
}

VectorIndex VectorIndex::load(const std::filesystem::path& path) {
  std::istringstream in(io::read_file(path));
  std::string line;
  if (!std::getline(in, line)) throw DataError("index file '" + path.string() + "' is empty");
  nlohmann::json header;
  try {
    header = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("index header is not JSON: " + std::string(e.what()), e.byte);
  }
  if (header.value("format", "") != kIndexFormat || header.value("version", 0) != kIndexVersion) {
    throw DataError("'" + path.string() + "' is not a version 1 vector index");
  }
  const auto dim = header.at("dim").get<std::size_t>();
  const auto count = header.at("count").get<std::size_t>();
  VectorIndex index;
  index.dim_ = dim;
  while (std::getline(in, line)) {
    if (text::is_blank(line)) continue;
    const auto j = nlohmann::json::parse(line);
    auto values = j.at("values").get<std::vector<double>>();
    if (values.size() != dim || j.at("dim").get<std::size_t>() != dim) {
      throw DataError("index entry '" + j.at("id").get<std::string>() + "' has the wrong dimension");
    }
    index.ids_.push_back(j.at("id").get<std::string>());
    index.matrix_.insert(index.matrix_.end(), values.begin(), values.end());
  }
  if (index.ids_.size() != count) throw DataError("index entry count does not match its header");
  return index;
}

IndexBuild build_index(const std::vector<IndexItem>& items, Embedder& embedder) {
  std::unordered_set<std::string> seen;
  for (const auto& it : items) {
    if (!seen.insert(it.dataset_id).second) throw DataError("duplicate dataset_id '" + it.dataset_id + "'");
  }
  IndexBuild out;
  std::vector<std::string> ids;
  std::vector<std::string> texts;
  for (const auto& it : items) {
    if (text::is_blank(it.text)) {
      out.excluded.push_back(it.dataset_id);
    } else {
      ids.push_back(it.dataset_id);
      texts.push_back(it.text);
    }
  }
  std::vector<std::pair<std::string, EmbeddingVector>> entries;
  if (!texts.empty()) {
    auto vecs = embedder.embed(texts);
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (vecs[i].is_zero()) {
        out.excluded.push_back(ids[i]);
      } else {
        entries.emplace_back(ids[i], std::move(vecs[i]));
      }
    }
  }
  if (entries.empty()) throw DataError("no item has indexable text");
  out.index = VectorIndex::from_vectors(std::move(entries));
  std::sort(out.excluded.begin(), out.excluded.end());
  return out;
}

std::vector<SearchHit> search_topk(const VectorIndex& index, const EmbeddingVector& query,
                                   const SearchParams& params) {
  return index.search(query, params);
}

}  // namespace mab::vectors
