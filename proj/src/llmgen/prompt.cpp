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

#include "mab/llmgen/prompt.hpp"

#include "mab/common/error.hpp"
#include "mab/common/text.hpp"

namespace mab::llmgen {

namespace {

constexpr std::string_view kDescribeWithSample =
    "Dataset {title} contains {n} records with column headers {headers}. Example records include: {rows}. ";
constexpr std::string_view kDescribeMetadataOnly = "Dataset {title}. ";
constexpr std::string_view kPublisherDescription = "The publisher describes it as follows: {description} ";

constexpr std::string_view kQueryPreamble =
    "You are simulating a member of the public searching an open data portal.\n"
    "Dataset title: {title}\n"
    "Dataset ID: {dataset_id}\n";

constexpr std::string_view kRequestingInstruction =
    "Write one search query in the requesting style: goal-oriented and specific. Mention the dataset by name. "
    "Reply with the query only.";

constexpr std::string_view kDescribingInstruction =
    "Write one search query in the describing style: specify the features or structure of the data you need "
    "without giving its title. Reply with the query only.";

constexpr std::string_view kImplyingInstruction =
    "Write one search query in the implying style: open-ended and abstract, stating the goal behind the search "
    "rather than asking for a dataset. Reply with the query only.";

std::string collapse(std::string_view s) { return text::join(text::split_whitespace(s), " "); }

std::string render_rows(const catalog::TableSample& sample) {
  std::vector<std::string> rows;
  const auto add = [&](const catalog::Row& row) { rows.push_back("[" + text::join(row, " | ") + "]"); };
  for (const auto& r : sample.head_rows) add(r);
  for (const auto& r : sample.tail_rows) add(r);
  if (rows.empty()) return "none";
  return text::join(rows, "; ");
}

}  // namespace

std::string_view template_name(TemplateId id) {
  switch (id) {
    case TemplateId::kDescribeV1: return "describe_v1";
    case TemplateId::kQueryRequestingV1: return "query_requesting_v1";
    case TemplateId::kQueryDescribingV1: return "query_describing_v1";
    case TemplateId::kQueryImplyingV1: return "query_implying_v1";
  }
  return "unknown";
}

std::string_view style_name(QueryStyle s) {
  switch (s) {
    case QueryStyle::kRequesting: return "requesting";
    case QueryStyle::kDescribing: return "describing";
    case QueryStyle::kImplying: return "implying";
  }
  return "unknown";
}

QueryStyle parse_style(std::string_view s) {
  for (auto style : kAllStyles) {
    if (style_name(style) == s) return style;
  }
  throw DataError("unknown query style '" + std::string(s) + "'");
}

TemplateId query_template(QueryStyle s) {
  switch (s) {
    case QueryStyle::kRequesting: return TemplateId::kQueryRequestingV1;
    case QueryStyle::kDescribing: return TemplateId::kQueryDescribingV1;
    case QueryStyle::kImplying: return TemplateId::kQueryImplyingV1;
  }
  return TemplateId::kQueryRequestingV1;
}

std::string render_template(std::string_view tmpl, const std::map<std::string, std::string, std::less<>>& values) {
  std::string out;
  std::size_t i = 0;
  while (i < tmpl.size()) {
    const auto open = tmpl.find('{', i);
    if (open == std::string_view::npos) {
      out += tmpl.substr(i);
      break;
    }
    out += tmpl.substr(i, open - i);
    const auto close = tmpl.find('}', open);
    if (close == std::string_view::npos) throw ConfigError("unterminated placeholder in prompt template");
    const auto name = tmpl.substr(open + 1, close - open - 1);
    const auto it = values.find(name);
    if (it == values.end()) throw ConfigError("no value for prompt placeholder {" + std::string(name) + "}");
    out += it->second;
    i = close + 1;
  }
  return out;
}

GenPrompt build_description_prompt(const catalog::DatasetRecord& record,
                                   const std::optional<catalog::TableSample>& sample) {
  std::map<std::string, std::string, std::less<>> values = {{"title", collapse(record.lds_title)}};
  std::string body;
  if (sample) {
    values["n"] = std::to_string(sample->record_count);
    values["headers"] = text::join(sample->headers, ", ");
    values["rows"] = render_rows(*sample);
    body = render_template(kDescribeWithSample, values);
  } else {
    body = render_template(kDescribeMetadataOnly, values);
  }
  if (record.lds_description && !text::is_blank(*record.lds_description)) {
    body += render_template(kPublisherDescription, {{"description", collapse(*record.lds_description)}});
  }
  body += kWordLimitInstruction;
  return {record.dataset_id, TemplateId::kDescribeV1, std::move(body)};
}

GenPrompt build_query_prompt(const catalog::DatasetRecord& record, QueryStyle style) {
  std::string body = render_template(kQueryPreamble, {{"title", collapse(record.lds_title)},
                                                      {"dataset_id", record.dataset_id}});
  switch (style) {
    case QueryStyle::kRequesting: body += kRequestingInstruction; break;
    case QueryStyle::kDescribing: body += kDescribingInstruction; break;
    case QueryStyle::kImplying: body += kImplyingInstruction; break;
  }
  return {record.dataset_id, query_template(style), std::move(body)};
}

}  // namespace mab::llmgen
