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

#include "mab/bench/metrics.hpp"

#include <cstdio>
#include <unordered_set>

#include "mab/common/error.hpp"

namespace mab::bench {

namespace {

std::string fixed3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

nlohmann::json metrics_json(const Metrics& m) {
  return {{"hit1", m.hit1}, {"hit3", m.hit3}, {"hit5", m.hit5}, {"mrr", m.mrr}, {"count", m.count}};
}

Metrics metrics_from_json(const nlohmann::json& j) {
  Metrics m;
  m.hit1 = j.at("hit1").get<double>();
  m.hit3 = j.at("hit3").get<double>();
  m.hit5 = j.at("hit5").get<double>();
  m.mrr = j.at("mrr").get<double>();
  m.count = j.at("count").get<std::size_t>();
  return m;
}

}  // namespace

Metrics compute_metrics(std::span<const std::optional<int>> gold_ranks) {
  if (gold_ranks.empty()) throw DataError("cannot compute metrics over zero outcomes");
  std::size_t h1 = 0, h3 = 0, h5 = 0;
  double rr = 0.0;
  for (const auto& r : gold_ranks) {
    if (!r) continue;
    if (*r < 1) throw DataError("gold rank must be positive, got " + std::to_string(*r));
    h1 += *r <= 1;
    h3 += *r <= 3;
    h5 += *r <= 5;
    if (*r <= kMrrCutoff) rr += 1.0 / *r;
  }
  const double n = static_cast<double>(gold_ranks.size());
  return {h1 / n, h3 / n, h5 / n, rr / n, gold_ranks.size()};
}

Metrics compute_metrics(const std::vector<RetrievalOutcome>& outcomes) {
  std::vector<std::optional<int>> ranks;
  ranks.reserve(outcomes.size());
  for (const auto& o : outcomes) ranks.push_back(o.gold_rank);
  return compute_metrics(ranks);
}

const std::vector<std::string>& slice_names() {
  static const std::vector<std::string> kNames = {"requesting", "describing", "implying", kSliceAll};
  return kNames;
}

ConditionReport summarize(const std::string& condition, const ConditionRun& run) {
  ConditionReport rep;
  rep.condition = condition;
  rep.index_size = run.index_size;
  rep.excluded = run.excluded.size();
  rep.degenerate = run.degenerate;
  for (auto style : llmgen::kAllStyles) {
    std::vector<std::optional<int>> ranks;
    for (const auto& o : run.outcomes) {
      if (o.style == style) ranks.push_back(o.gold_rank);
    }
    rep.slices[std::string(llmgen::style_name(style))] = ranks.empty() ? Metrics{} : compute_metrics(ranks);
  }
  rep.slices[kSliceAll] = compute_metrics(run.outcomes);
  return rep;
}

MatrixResult evaluate_matrix(const std::vector<catalog::DatasetRecord>& records,
                             const std::vector<llmgen::QueryRecord>& queries,
                             const std::vector<AblationConfig>& conditions, vectors::Embedder& embedder,
                             const vectors::SearchParams& params) {
  if (queries.empty()) throw DataError("query set is empty");
  if (conditions.empty()) throw ConfigError("no ablation conditions selected");
  for (const auto& c : conditions) condition(c.name);
  std::unordered_set<std::string> ids;
  for (const auto& r : records) ids.insert(r.dataset_id);
  for (const auto& q : queries) {
    if (!ids.contains(q.gold_dataset_id)) {
      throw DataError("query '" + q.query_id + "' refers to unknown dataset '" + q.gold_dataset_id + "'");
    }
  }

  const auto query_vectors = embed_queries(queries, embedder);
  MatrixResult out;
  out.report.k = params.k;
  for (const auto& c : conditions) {
    auto run = run_condition(records, c, queries, query_vectors, embedder, params);
    out.report.conditions.push_back(summarize(c.name, run));
    for (auto& o : run.outcomes) out.outcomes.push_back(std::move(o));
  }
  return out;
}

std::string render_report(const EvalReport& report, ReportFormat format) {
  if (format == ReportFormat::kJson) return to_json(report).dump(2) + "\n";
  if (format == ReportFormat::kCsv) {
    std::string out = "condition,slice,hit1,hit3,hit5,mrr,queries,index_size,excluded\n";
    for (const auto& c : report.conditions) {
      for (const auto& s : slice_names()) {
        const auto& m = c.slices.at(s);
        out += c.condition + "," + s + "," + fixed3(m.hit1) + "," + fixed3(m.hit3) + "," + fixed3(m.hit5) + "," +
               fixed3(m.mrr) + "," + std::to_string(m.count) + "," + std::to_string(c.index_size) + "," +
               std::to_string(c.excluded) + "\n";
      }
    }
    return out;
  }

  std::string out = "## Retrieval performance by ablation condition (k = " + std::to_string(report.k) + ")\n\n";
  out += "| Ablation Condition | Hit@1 | Hit@3 | Hit@5 | MRR |\n";
  out += "|---|---|---|---|---|\n";
  for (const auto& c : report.conditions) {
    const auto& m = c.slices.at(kSliceAll);
    out += "| " + c.condition + " | " + fixed3(m.hit1) + " | " + fixed3(m.hit3) + " | " + fixed3(m.hit5) + " | " +
           fixed3(m.mrr) + " |\n";
  }
  out += "\n## Retrieval performance (MRR / Hit@1) by query style\n\n";
  out += "| Ablation | Requesting | Describing | Implying |\n";
  out += "|---|---|---|---|\n";
  for (const auto& c : report.conditions) {
    out += "| " + c.condition;
    for (const char* s : {"requesting", "describing", "implying"}) {
      const auto& m = c.slices.at(s);
      out += " | " + fixed3(m.mrr) + " / " + fixed3(m.hit1);
    }
    out += " |\n";
  }
  out += "\n## Index coverage\n\n";
  out += "| Ablation | Indexed | Excluded | Queries |\n";
  out += "|---|---|---|---|\n";
  for (const auto& c : report.conditions) {
    out += "| " + c.condition + " | " + std::to_string(c.index_size) + " | " + std::to_string(c.excluded) + " | " +
           std::to_string(c.slices.at(kSliceAll).count) + " |\n";
  }
  return out;
}

nlohmann::json to_json(const EvalReport& report) {
  nlohmann::json conds = nlohmann::json::array();
  for (const auto& c : report.conditions) {
    nlohmann::json slices = nlohmann::json::object();
    for (const auto& [name, m] : c.slices) slices[name] = metrics_json(m);
    conds.push_back({{"condition", c.condition},
                     {"index_size", c.index_size},
                     {"excluded", c.excluded},
                     {"degenerate", c.degenerate},
                     {"slices", slices}});
  }
  return {{"k", report.k}, {"conditions", conds}};
}

EvalReport report_from_json(const nlohmann::json& j) {
  EvalReport r;
  try {
    r.k = j.at("k").get<std::size_t>();
    for (const auto& c : j.at("conditions")) {
      ConditionReport cr;
      cr.condition = c.at("condition").get<std::string>();
      cr.index_size = c.at("index_size").get<std::size_t>();
      cr.excluded = c.at("excluded").get<std::size_t>();
      cr.degenerate = c.at("degenerate").get<bool>();
      for (const auto& [name, m] : c.at("slices").items()) cr.slices[name] = metrics_from_json(m);
      r.conditions.push_back(std::move(cr));
    }
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed evaluation report: ") + e.what());
  }
  return r;
}

}  // namespace mab::bench
