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

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "mab/catalog/record.hpp"
#include "mab/catalog/table_sample.hpp"
#include "mab/llmgen/backend.hpp"
#include "mab/llmgen/prompt.hpp"

namespace mab::llmgen {

struct QueryRecord {
  std::string query_id;
  std::string gold_dataset_id;
  QueryStyle style = QueryStyle::kRequesting;
  std::string text;

  friend bool operator==(const QueryRecord&, const QueryRecord&) = default;
};

// "<dataset_id>-<style>"
std::string make_query_id(const std::string& dataset_id, QueryStyle style);

struct GenerationResult {
  std::optional<std::string> text;  // trimmed, non-empty on success
  int attempts = 0;
  std::string error;
};

// Calls the backend with exponential backoff. Transient failures and blank replies are
// retried up to config.max_retries times, then reported in the result. Non-transient
// backend errors (auth, bad request) are rethrown so the caller can abort the run.
// Each attempt is appended to `audit` when given.
GenerationResult generate_text(const GenPrompt& prompt, TextBackend& backend, const GenBackendConfig& config,
                               AuditLog* audit = nullptr);

// generate_text for a description prompt.
GenerationResult generate_description(const GenPrompt& prompt, TextBackend& backend, const GenBackendConfig& config,
                                      AuditLog* audit = nullptr);

// One query per style, in requesting/describing/implying order. nullopt when any style
// failed after retries.
std::optional<std::vector<QueryRecord>> generate_queries(const catalog::DatasetRecord& record, TextBackend& backend,
                                                         const GenBackendConfig& config, AuditLog* audit = nullptr);

struct DescribeOptions {
  std::filesystem::path base_dir;  // resolves relative distribution paths
  catalog::SampleOptions sample;
};

struct DescribeSummary {
  std::size_t generated = 0;
  std::size_t failed = 0;
  std::size_t without_sample = 0;
};

// Builds llm_prompt (with a table sample when one can be read) and fills llm_description for
// every record using up to config.concurrency in-flight requests. Failed records get
// llm_description cleared and the "llm_description_missing" flag. Records are updated in
// place by position, so completion order never affects the result.
DescribeSummary describe_records(std::vector<catalog::DatasetRecord>& records, TextBackend& backend,
                                 const GenBackendConfig& config, const DescribeOptions& options,
                                 AuditLog* audit = nullptr);

struct QuerySetResult {
  std::vector<QueryRecord> queries;
  std::vector<std::string> excluded;  // datasets with a failed style
};

// Three queries per record, in record order.
QuerySetResult generate_query_set(const std::vector<catalog::DatasetRecord>& records, TextBackend& backend,
                                  const GenBackendConfig& config, AuditLog* audit = nullptr);

nlohmann::json to_json(const QueryRecord& q);
QueryRecord query_from_json(const nlohmann::json& j);

void write_queries(const std::filesystem::path& path, const std::vector<QueryRecord>& queries);
// Throws DataError on malformed lines, blank text, unknown styles or duplicate query ids.
std::vector<QueryRecord> read_queries(const std::filesystem::path& path);

}  // namespace mab::llmgen
