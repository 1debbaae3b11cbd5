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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mab/catalog/record.hpp"
#include "mab/llmgen/generate.hpp"
#include "mab/vectors/embedding.hpp"
#include "mab/vectors/index.hpp"

namespace mab::bench {

// A named selection of metadata fields forming a record's searchable text.
struct AblationConfig {
  std::string name;
  std::vector<std::string> fields;

  friend bool operator==(const AblationConfig&, const AblationConfig&) = default;
};

// The fourteen conditions, in report order.
const std::vector<AblationConfig>& all_conditions();

// Throws ConfigError for an unknown name.
const AblationConfig& condition(std::string_view name);

// "all" or a comma-separated list of names; validated before any work starts.
std::vector<AblationConfig> parse_condition_list(std::string_view spec);

// Scalar fields verbatim, list fields joined by ", ", non-empty fields joined by "\n" in
// config order. May be empty.
std::string assemble_ablation_text(const catalog::DatasetRecord& record, const AblationConfig& config);

struct RetrievalOutcome {
  std::string query_id;
  std::string condition;
  llmgen::QueryStyle style = llmgen::QueryStyle::kRequesting;
  std::string gold_dataset_id;
  std::vector<std::string> ranked_ids;
  std::vector<double> scores;
  std::optional<int> gold_rank;  // 1-based; nullopt = miss

  friend bool operator==(const RetrievalOutcome&, const RetrievalOutcome&) = default;
};

struct ConditionRun {
  std::vector<RetrievalOutcome> outcomes;
  std::size_t index_size = 0;
  std::vector<std::string> excluded;  // records absent from the index
  bool degenerate = false;            // nothing could be indexed
};

// Embeds the queries once; reused across conditions.
std::vector<vectors::EmbeddingVector> embed_queries(const std::vector<llmgen::QueryRecord>& queries,
                                                    vectors::Embedder& embedder);

// Builds the condition's index and searches it with every query. A gold dataset that was
// excluded from the index, or not in the top k, is a miss. Throws DataError on an empty
// query set or a blank query.
ConditionRun run_condition(const std::vector<catalog::DatasetRecord>& records, const AblationConfig& config,
                           const std::vector<llmgen::QueryRecord>& queries, vectors::Embedder& embedder,
                           const vectors::SearchParams& params);
ConditionRun run_condition(const std::vector<catalog::DatasetRecord>& records, const AblationConfig& config,
                           const std::vector<llmgen::QueryRecord>& queries,
                           const std::vector<vectors::EmbeddingVector>& query_vectors, vectors::Embedder& embedder,
                           const vectors::SearchParams& params);

nlohmann::json to_json(const RetrievalOutcome& o);

}  // namespace mab::bench
