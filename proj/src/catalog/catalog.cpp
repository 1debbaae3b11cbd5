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

#include "mab/catalog/catalog.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "mab/common/error.hpp"
#include "mab/common/io.hpp"
#include "mab/common/text.hpp"

namespace mab::catalog {

using nlohmann::json;

namespace {

std::string entry_label(std::size_t index) { return "entry " + std::to_string(index); }

std::string scalar_to_string(const json& v, std::string_view field, std::size_t index) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number() || v.is_boolean()) return v.dump();
  throw LoadError(entry_label(index) + ": field '" + std::string(field) + "' must be a string");
}

std::optional<std::string> optional_string(const json& j, const char* field, std::size_t index) {
  const auto it = j.find(field);
  if (it == j.end() || it->is_null()) return std::nullopt;
  return scalar_to_string(*it, field, index);
}

std::vector<std::string> string_list(const json& j, const char* field, std::size_t index) {
  std::vector<std::string> out;
  const auto it = j.find(field);
  if (it == j.end() || it->is_null()) return out;
  if (!it->is_array()) {
    out.push_back(scalar_to_string(*it, field, index));
    return out;
  }
  for (const auto& v : *it) {
    if (v.is_null()) continue;
    out.push_back(scalar_to_string(v, field, index));
  }
  return out;
}

Distribution distribution_from_json(const json& j, std::size_t index) {
  Distribution d;
  if (j.is_string()) {
    d.url = j.get<std::string>();
    return d;
  }
  if (!j.is_object()) throw LoadError(entry_label(index) + ": distribution must be an object");
  d.url = optional_string(j, "url", index).value_or("");
  d.format_label = optional_string(j, "format", index);
  d.path = optional_string(j, "path", index);
  return d;
}

json optional_json(const std::optional<std::string>& v) { return v ? json(*v) : json(nullptr); }

std::vector<DatasetRecord> finalize(std::vector<DatasetRecord> records) {
  std::unordered_map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < records.size(); ++i) {
    auto [it, inserted] = seen.emplace(records[i].dataset_id, i);
    if (!inserted) {
      throw LoadError("duplicate dataset_id '" + records[i].dataset_id + "' at " + entry_label(it->second) +
                      " and " + entry_label(i));
    }
  }
  return records;
}

}  // namespace

CatalogFormat guess_format(const std::filesystem::path& path) {
  const auto ext = text::to_lower(path.extension().string());
  return (ext == ".jsonl" || ext == ".ndjson") ? CatalogFormat::kJsonl : CatalogFormat::kArrayJson;
}

DatasetRecord record_from_json(const json& j, std::size_t index) {
  if (!j.is_object()) throw LoadError(entry_label(index) + ": expected a JSON object");
  DatasetRecord r;
  const auto id = optional_string(j, "dataset_id", index);
  if (!id || text::is_blank(*id)) throw LoadError(entry_label(index) + ": missing dataset_id");
  r.dataset_id = *id;
  const auto title = optional_string(j, "lds_title", index);
  if (!title || text::is_blank(*title)) {
    throw LoadError(entry_label(index) + " ('" + r.dataset_id + "'): missing lds_title");
  }
  r.lds_title = *title;
  r.lds_description = optional_string(j, "lds_description", index);
  r.lds_keywords = string_list(j, "lds_keywords", index);
  r.lds_topic = string_list(j, "lds_topic", index);
  if (const auto it = j.find("distributions"); it != j.end() && !it->is_null()) {
    if (it->is_array()) {
      for (const auto& d : *it) r.distributions.push_back(distribution_from_json(d, index));
    } else {
      r.distributions.push_back(distribution_from_json(*it, index));
    }
  }
  r.lds_desc_keywords = string_list(j, "lds_desc_keywords", index);
  r.lds_desc_topics = string_list(j, "lds_desc_topics", index);
  r.llm_prompt = optional_string(j, "llm_prompt", index);
  r.llm_description = optional_string(j, "llm_description", index);
  r.llm_desc_keywords = string_list(j, "llm_desc_keywords", index);
  r.llm_desc_topics = string_list(j, "llm_desc_topics", index);
  for (const auto& f : string_list(j, "flags", index)) r.set_flag(f);
  return r;
}

json to_json(const DatasetRecord& r) {
  json dists = json::array();
  for (const auto& d : r.distributions) {
    json dj = {{"url", d.url}, {"format", optional_json(d.format_label)}};
    if (d.path) dj["path"] = *d.path;
    dists.push_back(std::move(dj));
  }
  json j;
  j["dataset_id"] = r.dataset_id;
  j["lds_title"] = r.lds_title;
  j["lds_description"] = optional_json(r.lds_description);
  j["lds_keywords"] = r.lds_keywords;
  j["lds_topic"] = r.lds_topic;
  j["distributions"] = std::move(dists);
  j["lds_desc_keywords"] = r.lds_desc_keywords;
  j["lds_desc_topics"] = r.lds_desc_topics;
  j["llm_prompt"] = optional_json(r.llm_prompt);
  j["llm_description"] = optional_json(r.llm_description);
  j["llm_desc_keywords"] = r.llm_desc_keywords;
  j["llm_desc_topics"] = r.llm_desc_topics;
  j["flags"] = r.flags;
  return j;
}

std::vector<DatasetRecord> parse_catalog_text(const std::string& content, CatalogFormat format) {
  std::vector<DatasetRecord> records;
  if (format == CatalogFormat::kArrayJson) {
    json doc;
    try {
      doc = json::parse(content);
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("malformed catalogue JSON at byte ") + std::to_string(e.byte) + ": " + e.what(),
                       e.byte);
    }
    if (!doc.is_array()) throw ParseError("catalogue JSON must be an array of objects", 0);
    records.reserve(doc.size());
    for (std::size_t i = 0; i < doc.size(); ++i) records.push_back(record_from_json(doc[i], i));
    return finalize(std::move(records));
  }

  std::size_t offset = 0;
  std::size_t index = 0;
  while (offset < content.size()) {
    auto end = content.find('\n', offset);
    if (end == std::string::npos) end = content.size();
    const std::string_view line(content.data() + offset, end - offset);
    if (!text::is_blank(line)) {
      json j;
      try {
        j = json::parse(line);
      } catch (const json::parse_error& e) {
        const std::size_t at = offset + (e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError("malformed JSONL at byte " + std::to_string(at) + " (line entry " + std::to_string(index) +
                             "): " + e.what(),
                         at);
      }
      records.push_back(record_from_json(j, index));
      ++index;
    }
    offset = end + 1;
  }
  return finalize(std::move(records));
}

std::vector<DatasetRecord> parse_catalog(const std::filesystem::path& path, CatalogFormat format) {
  return parse_catalog_text(io::read_file(path), format);
}

void write_jsonl(std::ostream& out, const std::vector<DatasetRecord>& records) {
  for (const auto& r : records) out << to_json(r).dump() << '\n';
}

void write_jsonl(const std::filesystem::path& path, const std::vector<DatasetRecord>& records) {
  std::ostringstream os;
  write_jsonl(os, records);
  io::write_file(path, os.str());
}

const std::vector<std::string>& default_completeness_fields() {
  static const std::vector<std::string> kFields = {"lds_title", "lds_topic", "lds_description", "download_link",
                                                   "lds_keywords"};
  return kFields;
}

CompletenessReport completeness_report(const std::vector<DatasetRecord>& records,
                                       const std::vector<std::string>& fields) {
  if (records.empty()) throw DataError("completeness report needs at least one record");
  CompletenessReport report;
  report.total_count = records.size();
  report.structured_count = static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const auto& r) {
    return std::any_of(r.distributions.begin(), r.distributions.end(),
                       [](const Distribution& d) { return d.is_structured(); });
  }));
  for (const auto& f : fields) {
    FieldCoverage c;
    c.field = f;
    c.total = records.size();
    for (const auto& r : records) c.present += field_present(r, f) ? 1 : 0;
    c.fraction = static_cast<double>(c.present) / static_cast<double>(c.total);
    report.fields.push_back(std::move(c));
  }
  return report;
}

std::string render_completeness_csv(const CompletenessReport& report) {
  std::string out = "field,present,total,fraction\n";
  char buf[64];
  for (const auto& c : report.fields) {
    std::snprintf(buf, sizeof buf, "%.3f", c.fraction);
    out += c.field + "," + std::to_string(c.present) + "," + std::to_string(c.total) + "," + buf + "\n";
  }
  return out;
}

std::vector<DatasetRecord> filter_structured(const std::vector<DatasetRecord>& records) {
  std::vector<DatasetRecord> out;
  std::copy_if(records.begin(), records.end(), std::back_inserter(out), [](const DatasetRecord& r) {
    return std::any_of(r.distributions.begin(), r.distributions.end(),
                       [](const Distribution& d) { return d.is_structured(); });
  });
  return out;
}

}  // namespace mab::catalog
