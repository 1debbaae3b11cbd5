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

#include "mab/catalog/record.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "mab/common/error.hpp"
#include "mab/common/text.hpp"

namespace mab::catalog {

namespace {

constexpr std::array<std::string_view, 3> kStructuredFormats = {"csv", "xlsx", "xls"};

bool is_structured_label(std::string_view label) {
  const auto l = text::to_lower(text::trim(label));
  std::string_view v = l;
  if (!v.empty() && v.front() == '.') v.remove_prefix(1);
  return std::find(kStructuredFormats.begin(), kStructuredFormats.end(), v) != kStructuredFormats.end();
}

std::string_view url_extension(std::string_view url) {
  const auto cut = url.find_first_of("?#");
  if (cut != std::string_view::npos) url = url.substr(0, cut);
  const auto slash = url.rfind('/');
  const auto last = slash == std::string_view::npos ? url : url.substr(slash + 1);
  const auto dot = last.rfind('.');
  if (dot == std::string_view::npos) return {};
  return last.substr(dot + 1);
}

bool any_present(const std::vector<std::string>& v) {
  return std::any_of(v.begin(), v.end(), [](const std::string& s) { return !text::is_blank(s); });
}

bool opt_present(const std::optional<std::string>& v) { return v && !text::is_blank(*v); }

}  // namespace

bool Distribution::is_structured() const {
  if (format_label && !text::is_blank(*format_label)) return is_structured_label(*format_label);
  const auto ext = url_extension(url);
  return !ext.empty() && is_structured_label(ext);
}

bool DatasetRecord::has_flag(std::string_view f) const {
  return std::binary_search(flags.begin(), flags.end(), f);
}

void DatasetRecord::set_flag(std::string_view f) {
  auto it = std::lower_bound(flags.begin(), flags.end(), f);
  if (it == flags.end() || *it != f) flags.insert(it, std::string(f));
}

void DatasetRecord::clear_flag(std::string_view f) {
  auto it = std::lower_bound(flags.begin(), flags.end(), f);
  if (it != flags.end() && *it == f) flags.erase(it);
}

const std::vector<std::string>& field_names() {
  static const std::vector<std::string> kNames = {
      "dataset_id",        "lds_title",       "lds_description", "lds_keywords",      "lds_topic",
      "download_link",     "lds_desc_keywords", "lds_desc_topics", "llm_prompt",      "llm_description",
      "llm_desc_keywords", "llm_desc_topics"};
  return kNames;
}

bool field_present(const DatasetRecord& r, std::string_view field) {
  if (field == "dataset_id") return !text::is_blank(r.dataset_id);
  if (field == "lds_title") return !text::is_blank(r.lds_title);
  if (field == "lds_description") return opt_present(r.lds_description);
  if (field == "lds_keywords") return any_present(r.lds_keywords);
  if (field == "lds_topic") return any_present(r.lds_topic);
  if (field == "download_link" || field == "distributions") {
    return std::any_of(r.distributions.begin(), r.distributions.end(),
                       [](const Distribution& d) { return is_valid_absolute_url(text::trim(d.url)); });
  }
  if (field == "lds_desc_keywords") return any_present(r.lds_desc_keywords);
  if (field == "lds_desc_topics") return any_present(r.lds_desc_topics);
  if (field == "llm_prompt") return opt_present(r.llm_prompt);
  if (field == "llm_description") return opt_present(r.llm_description);
  if (field == "llm_desc_keywords") return any_present(r.llm_desc_keywords);
  if (field == "llm_desc_topics") return any_present(r.llm_desc_topics);
  throw ConfigError("unknown metadata field '" + std::string(field) + "'");
}

bool is_valid_absolute_url(std::string_view url) {
  if (url.empty()) return false;
  for (char c : url) {
    const auto u = static_cast<unsigned char>(c);
    if (u <= 0x20 || u == 0x7f) return false;
  }
  const auto sep = url.find("://");
  if (sep == std::string_view::npos || sep == 0) return false;
  const auto scheme = url.substr(0, sep);
  if (!std::isalpha(static_cast<unsigned char>(scheme[0]))) return false;
  for (char c : scheme) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' && c != '.') return false;
  }
  auto authority = url.substr(sep + 3);
  authority = authority.substr(0, authority.find_first_of("/?#"));
  if (const auto at = authority.rfind('@'); at != std::string_view::npos) authority.remove_prefix(at + 1);
  std::string_view host = authority;
  if (!host.empty() && host.front() == '[') {
    const auto close = host.find(']');
    if (close == std::string_view::npos) return false;
    const auto rest = host.substr(close + 1);
    host = host.substr(0, close + 1);
    if (!rest.empty() && rest.front() != ':') return false;
    authority = rest;
  } else if (const auto colon = host.find(':'); colon != std::string_view::npos) {
    authority = host.substr(colon);
    host = host.substr(0, colon);
  } else {
    authority = {};
  }
  if (host.empty() || host == "[]") return false;
  if (!authority.empty()) {
    const auto port = authority.substr(1);
    if (!std::all_of(port.begin(), port.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      return false;
  }
  return true;
}

}  // namespace mab::catalog
