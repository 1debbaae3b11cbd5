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
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "mab/catalog/table_sample.hpp"
#include "mab/llmgen/backend.hpp"
#include "mab/textmine/enrich.hpp"

namespace mab::cli {

inline const std::vector<std::string> kStageOrder = {"ingest",      "analyze",  "enrich-nlp", "enrich-llm",
                                                     "gen-queries", "evaluate", "report"};

enum class EmbedProvider { kHash, kRemote };

struct EmbedConfig {
  EmbedProvider provider = EmbedProvider::kHash;
  std::size_t dim = 256;
  std::uint64_t seed = 0;
  std::string endpoint;
  std::string api_key_env = "MAB_EMBED_API_KEY";
  std::size_t batch_size = 64;

  friend bool operator==(const EmbedConfig&, const EmbedConfig&) = default;
};

struct RunConfig {
  std::filesystem::path catalog;
  std::string catalog_format = "auto";  // auto | json | jsonl
  std::filesystem::path out = "out";
  std::vector<std::string> stages = kStageOrder;
  std::filesystem::path gazetteer;  // empty = built-in
  textmine::EnrichParams textmine;
  catalog::SampleOptions sample;
  llmgen::GenBackendConfig llm;
  EmbedConfig embed;
  std::size_t search_k = 5;
  std::string conditions = "all";

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

// TOML-style subset: top-level keys, [section] tables, quoted strings, numbers, booleans,
// and arrays of strings. Unknown keys and type mismatches throw ConfigError.
RunConfig parse_config(std::string_view content);
RunConfig load_config(const std::filesystem::path& path);

// Emits every key; parse_config(serialize_config(c)) == c.
std::string serialize_config(const RunConfig& config);

// Range and consistency checks that need no filesystem access.
void validate_config(const RunConfig& config);

}  // namespace mab::cli
