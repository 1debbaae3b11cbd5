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

#include "mab/bench/ablation.hpp"

#include <unordered_map>

#include "mab/common/error.hpp"
#include "mab/common/text.hpp"

namespace mab::bench {

namespace {

std::string field_text(const catalog::DatasetRecord& r, std::string_view field) {
  const auto list = [](const std::vector<std::string>& v) {
    std::vector<std::string> kept;
    for (const auto& s : v) {
      if (!text::is_blank(s)) kept.emplace_back(text::trim(s));
    }
    return text::join(kept, ", ");
  };
  const auto scalar = [](const std::optional<std::string>& v) {
    return v && !text::is_blank(*v) ? *v : std::string();
  };
  if (field == "lds_description") return scalar(r.lds_description);
  if (field == "lds_keywords") return list(r.lds_keywords);
  if (field == "lds_topic") return list(r.lds_topic);
  if (field == "lds_desc_keywords") return list(r.lds_desc_keywords);
  if (field == "lds_desc_topics") return list(r.lds_desc_topics);
  if (field == "llm_description") return scalar(r.llm_description);
  if (field == "llm_desc_keywords") return list(r.llm_desc_keywords);
  if (field == "llm_desc_topics") return list(r.llm_desc_topics);
  throw ConfigError("field '" + std::string(field) + "' cannot be part of an ablation");
}

}  // namespace

const std::vector<AblationConfig>& all_conditions() {
  static const std::vector<AblationConfig> kConditions = {
      {"key_original", {"lds_keywords", "lds_topic"}},
      {"key_nlp", {"lds_desc_keywords", "lds_desc_topics"}},
      {"key_llm", {"llm_desc_keywords", "llm_desc_topics"}},
      {"desc_original", {"lds_description"}},
      {"desc_llm", {"llm_description"}},
      {"full_original", {"lds_description", "lds_keywords", "lds_topic"}},
      {"full_nlp", {"lds_description", "lds_desc_keywords", "lds_desc_topics"}},
      {"full_llm", {"llm_description", "llm_desc_keywords", "llm_desc_topics"}},
      {"onlykey_original", {"lds_keywords"}},
      {"onlykey_nlp", {"lds_desc_keywords"}},
      {"onlykey_llm", {"llm_desc_keywords"}},
      {"onlytopic_original", {"lds_topic"}},
      {"onlytopic_nlp", {"lds_desc_topics"}},
      {"onlytopic_llm", {"llm_desc_topics"}},
  };
  return kConditions;
}

const AblationConfig& condition(std::string_view name) {
  for (const auto& c : all_conditions()) {
    if (c.name == name) return c;
  }
  throw ConfigError("unknown ablation condition '" + std::string(name) + "'");
}

std::vector<AblationConfig> parse_condition_list(std::string_view spec) {
  const auto trimmed = text::trim(spec);
  if (trimmed.empty() || trimmed == "all") return all_conditions();
  std::vector<AblationConfig> out;
  std::size_t start = 0;
  while (start <= trimmed.size()) {
    auto end = trimmed.find(',', start);
    if (end == std::string_view::npos) end = trimmed.size();
    const auto name = text::trim(trimmed.substr(start, end - start));
    if (!name.empty()) {
      const auto& c = condition(name);
      bool dup = false;
      for (const auto& o : out) dup = dup || o.name == c.name;
      if (!dup) out.push_back(c);
    }
    start = end + 1;
  }
  if (out.empty()) throw ConfigError("empty condition list");
  return out;
}

std::string assemble_ablation_text(const catalog::DatasetRecord& record, const AblationConfig& config) {
  std::vector<std::string> parts;
  for (const auto& f : config.fields) {
    auto t = field_text(record, f);
    if (!t.empty()) parts.push_back(std::move(t));
  }
  return text::join(parts, "\n");
}

std::vector<vectors::EmbeddingVector> embed_queries(const std::vector<llmgen::QueryRecord>& queries,
                                                    vectors::Embedder& embedder) {
  if (queries.empty()) throw DataError("query set is empty");
  std::vector<std::string> texts;
  texts.reserve(queries.size());
  for (const auto& q : queries) texts.push_back(q.text);
  auto vecs = vectors::embed_texts(texts, embedder);
  for (std::size_t i = 0; i < vecs.size(); ++i) {
    if (vecs[i].is_zero()) throw DataError("query '" + queries[i].query_id + "' has no embeddable text");
  }
  return vecs;
}

ConditionRun run_condition(const std::vector<catalog::DatasetRecord>& records, const AblationConfig& config,
                           const std::vector<llmgen::QueryRecord>& queries, vectors::Embedder& embedder,
                           const vectors::SearchParams& params) {
  return run_condition(records, config, queries, embed_queries(queries, embedder), embedder, params);
}

ConditionRun run_condition(const std::vector<catalog::DatasetRecord>& records, const AblationConfig& config,
                           const std::vector<llmgen::QueryRecord>& queries,
                           const std::vector<vectors::EmbeddingVector>& query_vectors, vectors::Embedder& embedder,
                           const vectors::SearchParams& params) {
  if (queries.empty()) throw DataError("query set is empty");
  if (query_vectors.size() != queries.size()) throw DataError("one query vector per query is required");
  std::vector<vectors::IndexItem> items;
  items.reserve(records.size());
  for (const auto& r : records) items.push_back({r.dataset_id, assemble_ablation_text(r, config)});

  ConditionRun run;
  std::optional<vectors::IndexBuild> built;
  try {
    built = vectors::build_index(items, embedder);
  } catch (const DataError&) {
    // Every record lacks this condition's fields: all queries miss.
    run.degenerate = true;
    for (const auto& it : items) run.excluded.push_back(it.dataset_id);
  }
  if (built) {
    run.index_size = built->index.size();
    run.excluded = built->excluded;
  }

  run.outcomes.reserve(queries.size());
  for (std::size_t qi = 0; qi < queries.size(); ++qi) {
    const auto& q = queries[qi];
    RetrievalOutcome o;
    o.query_id = q.query_id;
    o.condition = config.name;
    o.style = q.style;
    o.gold_dataset_id = q.gold_dataset_id;
    if (built) {
      for (auto& hit : built->index.search(query_vectors[qi], params)) {
        o.ranked_ids.push_back(std::move(hit.dataset_id));
        o.scores.push_back(hit.score);
      }
    }
    for (std::size_t r = 0; r < o.ranked_ids.size(); ++r) {
      if (o.ranked_ids[r] == q.gold_dataset_id) {
        o.gold_rank = static_cast<int>(r + 1);
        break;
      }
    }
    run.outcomes.push_back(std::move(o));
  }
  return run;
}

nlohmann::json to_json(const RetrievalOutcome& o) {
  return {{"query_id", o.query_id},
          {"condition", o.condition},
          {"style", llmgen::style_name(o.style)},
          {"gold_dataset_id", o.gold_dataset_id},
          {"ranked_ids", o.ranked_ids},
          {"scores", o.scores},
          {"gold_rank", o.gold_rank ? nlohmann::json(*o.gold_rank) : nlohmann::json(nullptr)}};
}

}  // namespace mab::bench
