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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "mab/bench/ablation.hpp"

namespace mab::bench {

struct Metrics {
  double hit1 = 0.0;
  double hit3 = 0.0;
  double hit5 = 0.0;
  double mrr = 0.0;  // reciprocal rank, 0 for a miss or a rank beyond kMrrCutoff
  std::size_t count = 0;

  friend bool operator==(const Metrics&, const Metrics&) = default;
};

inline constexpr int kMrrCutoff = 5;

// Throws DataError on an empty list or a rank below 1.
Metrics compute_metrics(std::span<const std::optional<int>> gold_ranks);
Metrics compute_metrics(const std::vector<RetrievalOutcome>& outcomes);

inline constexpr const char* kSliceAll = "all";

// Slice order used by every report.
const std::vector<std::string>& slice_names();

struct ConditionReport {
  std::string condition;
  std::map<std::string, Metrics> slices;  // requesting, describing, implying, all
  std::size_t index_size = 0;
  std::size_t excluded = 0;
  bool degenerate = false;

  friend bool operator==(const ConditionReport&, const ConditionReport&) = default;
};

struct EvalReport {
  std::size_t k = 5;
  std::vector<ConditionReport> conditions;

  friend bool operator==(const EvalReport&, const EvalReport&) = default;
};

ConditionReport summarize(const std::string& condition, const ConditionRun& run);

struct MatrixResult {
  EvalReport report;
  std::vector<RetrievalOutcome> outcomes;  // condition-major, query order within
};

// Runs every condition against the same embedded queries. Throws DataError when a query's
// gold dataset is not among the records or the query set is empty.
MatrixResult evaluate_matrix(const std::vector<catalog::DatasetRecord>& records,
                             const std::vector<llmgen::QueryRecord>& queries,
                             const std::vector<AblationConfig>& conditions, vectors::Embedder& embedder,
                             const vectors::SearchParams& params);

enum class ReportFormat { kMarkdown, kCsv, kJson };

// Markdown: an overall table (Hit@1/3/5, MRR) and a per-style MRR / Hit@1 table, 3 decimals.
// CSV/JSON: the full metric grid.
std::string render_report(const EvalReport& report, ReportFormat format);

nlohmann::json to_json(const EvalReport& report);
EvalReport report_from_json(const nlohmann::json& j);

}  // namespace mab::bench
