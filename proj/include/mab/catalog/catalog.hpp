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
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "mab/catalog/record.hpp"

namespace mab::catalog {

enum class CatalogFormat { kArrayJson, kJsonl };

// Picks kJsonl for *.jsonl / *.ndjson, kArrayJson otherwise.
CatalogFormat guess_format(const std::filesystem::path& path);

// Loads a catalogue dump. Missing optional fields stay empty; a scalar where a list is
// expected becomes a one-element list. Throws ParseError (with byte offset) on malformed
// input and LoadError on missing id/title or duplicate ids.
std::vector<DatasetRecord> parse_catalog(const std::filesystem::path& path, CatalogFormat format);
std::vector<DatasetRecord> parse_catalog_text(const std::string& content, CatalogFormat format);

nlohmann::json to_json(const DatasetRecord& r);
// `index` only labels error messages.
DatasetRecord record_from_json(const nlohmann::json& j, std::size_t index);

// One record per line, all metadata fields present (null/[] when empty).
void write_jsonl(std::ostream& out, const std::vector<DatasetRecord>& records);
void write_jsonl(const std::filesystem::path& path, const std::vector<DatasetRecord>& records);

struct FieldCoverage {
  std::string field;
  std::size_t present = 0;
  std::size_t total = 0;
  double fraction = 0.0;
};

struct CompletenessReport {
  std::vector<FieldCoverage> fields;
  std::size_t total_count = 0;
  std::size_t structured_count = 0;
};

// Field order used by the analyze stage: title, theme, description, download link, keywords.
const std::vector<std::string>& default_completeness_fields();

// Throws DataError on an empty record list, ConfigError on unknown field names.
CompletenessReport completeness_report(const std::vector<DatasetRecord>& records,
                                       const std::vector<std::string>& fields);

// CSV with header field,present,total,fraction; fraction to 3 decimals.
std::string render_completeness_csv(const CompletenessReport& report);

// Keeps records with at least one structured distribution, in input order.
std::vector<DatasetRecord> filter_structured(const std::vector<DatasetRecord>& records);

}  // namespace mab::catalog
