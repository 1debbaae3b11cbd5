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

#include "mab/llmgen/generate.hpp"

#include <chrono>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "mab/common/error.hpp"
#include "mab/common/io.hpp"
#include "mab/common/parallel.hpp"
#include "mab/common/text.hpp"

namespace mab::llmgen {

namespace {

using Clock = std::chrono::steady_clock;

void log_attempt(AuditLog* audit, const GenPrompt& prompt, int attempt, bool ok, int status, const std::string& error,
                 const std::string& response, Clock::duration elapsed) {
  if (!audit) return;
  audit->append({{"dataset_id", prompt.dataset_id},
                 {"template_id", template_name(prompt.template_id)},
                 {"attempt", attempt},
                 {"retry", attempt > 1},
                 {"status", ok ? "ok" : "error"},
                 {"http_status", status},
                 {"error", error},
                 {"prompt", prompt.text},
                 {"response", response},
                 {"elapsed_ms", std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count()}});
}

}  // namespace

std::string make_query_id(const std::string& dataset_id, QueryStyle style) {
  return dataset_id + "-" + std::string(style_name(style));
}

GenerationResult generate_text(const GenPrompt& prompt, TextBackend& backend, const GenBackendConfig& config,
                               AuditLog* audit) {
  GenerationResult result;
  for (int attempt = 0; attempt <= config.max_retries; ++attempt) {
    if (attempt > 0) {
      std::this_thread::sleep_for(config.backoff * (1LL << std::min(attempt - 1, 20)));
    }
    result.attempts = attempt + 1;
    const auto start = Clock::now();
    try {
      std::string reply = backend.complete(prompt.text, config.temperature);
      const auto trimmed = std::string(text::trim(reply));
      if (trimmed.empty()) {
        result.error = "backend returned blank text";
        log_attempt(audit, prompt, attempt + 1, false, 0, result.error, reply, Clock::now() - start);
        continue;
      }
      log_attempt(audit, prompt, attempt + 1, true, 200, "", trimmed, Clock::now() - start);
      result.text = trimmed;
      result.error.clear();
      return result;
    } catch (const BackendError& e) {
      result.error = e.what();
      log_attempt(audit, prompt, attempt + 1, false, e.status(), e.what(), "", Clock::now() - start);
      if (!e.transient()) throw;
    }
  }
  return result;
}

GenerationResult generate_description(const GenPrompt& prompt, TextBackend& backend, const GenBackendConfig& config,
                                      AuditLog* audit) {
  return generate_text(prompt, backend, config, audit);
}

std::optional<std::vector<QueryRecord>> generate_queries(const catalog::DatasetRecord& record, TextBackend& backend,
                                                         const GenBackendConfig& config, AuditLog* audit) {
  std::vector<QueryRecord> out;
  for (auto style : kAllStyles) {
    const auto prompt = build_query_prompt(record, style);
    auto res = generate_text(prompt, backend, config, audit);
    if (!res.text) return std::nullopt;
    out.push_back({make_query_id(record.dataset_id, style), record.dataset_id, style, std::move(*res.text)});
  }
  return out;
}

DescribeSummary describe_records(std::vector<catalog::DatasetRecord>& records, TextBackend& backend,
                                 const GenBackendConfig& config, const DescribeOptions& options, AuditLog* audit) {
  std::vector<GenPrompt> prompts(records.size());
  DescribeSummary summary;
  for (std::size_t i = 0; i < records.size(); ++i) {
    auto& r = records[i];
    std::optional<catalog::TableSample> sample;
    if (const auto src = catalog::resolve_sample_source(r, options.base_dir)) {
      try {
        sample = catalog::sample_table(*src, options.sample);
      } catch (const SamplingError&) {
        sample.reset();
      }
    }
    if (sample) {
      r.clear_flag(catalog::flag::kNoSample);
    } else {
      r.set_flag(catalog::flag::kNoSample);
      ++summary.without_sample;
    }
    prompts[i] = build_description_prompt(r, sample);
    r.llm_prompt = prompts[i].text;
  }

  std::vector<GenerationResult> results(records.size());
  parallel_for(records.size(), config.concurrency,
               [&](std::size_t i) { results[i] = generate_description(prompts[i], backend, config, audit); });

  for (std::size_t i = 0; i < records.size(); ++i) {
    auto& r = records[i];
    if (results[i].text) {
      r.llm_description = std::move(results[i].text);
      r.clear_flag(catalog::flag::kLlmDescriptionMissing);
      ++summary.generated;
    } else {
      r.llm_description.reset();
      r.set_flag(catalog::flag::kLlmDescriptionMissing);
      ++summary.failed;
    }
  }
  return summary;
}

QuerySetResult generate_query_set(const std::vector<catalog::DatasetRecord>& records, TextBackend& backend,
                                  const GenBackendConfig& config, AuditLog* audit) {
  std::vector<std::optional<std::vector<QueryRecord>>> per_record(records.size());
  parallel_for(records.size(), config.concurrency,
               [&](std::size_t i) { per_record[i] = generate_queries(records[i], backend, config, audit); });
  QuerySetResult out;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (!per_record[i]) {
      out.excluded.push_back(records[i].dataset_id);
      continue;
    }
    for (auto& q : *per_record[i]) out.queries.push_back(std::move(q));
  }
  return out;
}

nlohmann::json to_json(const QueryRecord& q) {
  return {{"query_id", q.query_id}, {"gold_dataset_id", q.gold_dataset_id}, {"style", style_name(q.style)},
          {"text", q.text}};
}

QueryRecord query_from_json(const nlohmann::json& j) {
  QueryRecord q;
  try {
    q.query_id = j.at("query_id").get<std::string>();
    q.gold_dataset_id = j.at("gold_dataset_id").get<std::string>();
    q.style = parse_style(j.at("style").get<std::string>());
    q.text = j.at("text").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed query record: ") + e.what());
  }
  if (text::is_blank(q.text)) throw DataError("query '" + q.query_id + "' has blank text");
  if (q.query_id.empty() || q.gold_dataset_id.empty()) throw DataError("query record lacks an id");
  return q;
}

void write_queries(const std::filesystem::path& path, const std::vector<QueryRecord>& queries) {
  std::ostringstream os;
  for (const auto& q : queries) os << to_json(q).dump() << '\n';
  io::write_file(path, os.str());
}

std::vector<QueryRecord> read_queries(const std::filesystem::path& path) {
  std::istringstream in(io::read_file(path));
  std::vector<QueryRecord> out;
  std::unordered_set<std::string> ids;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (text::is_blank(line)) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(path.string() + ":" + std::to_string(lineno) + ": " + e.what(), e.byte);
    }
    auto q = query_from_json(j);
    if (!ids.insert(q.query_id).second) throw DataError("duplicate query_id '" + q.query_id + "'");
    out.push_back(std::move(q));
  }
  return out;
}

}  // namespace mab::llmgen
