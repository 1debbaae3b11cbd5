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
#include <iosfwd>
#include <string>
#include <vector>

#include "mab/cli/config.hpp"

namespace mab::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kConfigError = 2, kDataError = 3, kBackendError = 4 };

// Artifact written by each stage, relative to the output directory.
struct Artifacts {
  static constexpr const char* kCatalog = "catalog.jsonl";
  static constexpr const char* kStructured = "structured.jsonl";
  static constexpr const char* kCompleteness = "completeness.csv";
  static constexpr const char* kNlp = "nlp.jsonl";
  static constexpr const char* kEnriched = "enriched.jsonl";
  static constexpr const char* kAudit = "llm_audit.jsonl";
  static constexpr const char* kQueries = "queries.jsonl";
  static constexpr const char* kOutcomes = "outcomes.jsonl";
  static constexpr const char* kReportJson = "report.json";
  static constexpr const char* kReportMd = "report.md";
  static constexpr const char* kReportCsv = "report.csv";
};

// Overrides for a single stage's inputs (evaluate --catalog/--queries).
struct StageInputs {
  std::filesystem::path enriched;
  std::filesystem::path queries;
};

// Checks referenced input paths. Throws ConfigError.
void validate_paths(const RunConfig& config, const std::vector<std::string>& stages);

// Runs `stages` in pipeline order. Throws mab::Error subclasses.
void run_pipeline(const RunConfig& config, const std::vector<std::string>& stages, std::ostream& log,
                  bool verbose = false, const StageInputs& inputs = {});

// Full command line entry point; returns the process exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mab::cli
