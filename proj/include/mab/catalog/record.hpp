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

namespace mab::catalog {

// One downloadable resource attached to a catalogue entry.
struct Distribution {
  std::string url;
  std::optional<std::string> format_label;
  // Local copy of the resource (relative paths resolve against the catalogue file).
  std::optional<std::string> path;

  // True iff the explicit format label, or failing that the URL extension, is csv/xlsx/xls.
  bool is_structured() const;

  friend bool operator==(const Distribution&, const Distribution&) = default;
};

namespace flag {
inline constexpr std::string_view kLdsNotEnriched = "lds_desc_not_enriched";
inline constexpr std::string_view kLlmNotEnriched = "llm_desc_not_enriched";
inline constexpr std::string_view kLlmDescriptionMissing = "llm_description_missing";
inline constexpr std::string_view kNoSample = "no_sample_available";
}  // namespace flag

// A catalogue entry: publisher metadata plus the NLP- and LLM-derived fields.
struct DatasetRecord {
  std::string dataset_id;
  std::string lds_title;
  std::optional<std::string> lds_description;
  std::vector<std::string> lds_keywords;
  std::vector<std::string> lds_topic;
  std::vector<Distribution> distributions;

  std::vector<std::string> lds_desc_keywords;
  std::vector<std::string> lds_desc_topics;

  std::optional<std::string> llm_prompt;
  std::optional<std::string> llm_description;
  std::vector<std::string> llm_desc_keywords;
  std::vector<std::string> llm_desc_topics;

  // Stage markers such as "llm_description_missing"; sorted, no duplicates.
  std::vector<std::string> flags;

  bool has_flag(std::string_view f) const;
  void set_flag(std::string_view f);
  void clear_flag(std::string_view f);

  friend bool operator==(const DatasetRecord&, const DatasetRecord&) = default;
};

// Names accepted wherever a record field is addressed by name.
const std::vector<std::string>& field_names();

// Presence after whitespace trim. Lists need one non-blank element; "download_link"
// (alias "distributions") needs one distribution with a syntactically valid absolute URL.
// Throws ConfigError for unknown names.
bool field_present(const DatasetRecord& r, std::string_view field);

// scheme "://" authority, no whitespace, non-empty host, numeric port if present.
bool is_valid_absolute_url(std::string_view url);

}  // namespace mab::catalog
