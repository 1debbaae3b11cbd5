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

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "mab/catalog/record.hpp"
#include "mab/catalog/table_sample.hpp"

namespace mab::llmgen {

enum class TemplateId { kDescribeV1, kQueryRequestingV1, kQueryDescribingV1, kQueryImplyingV1 };

std::string_view template_name(TemplateId id);

enum class QueryStyle { kRequesting, kDescribing, kImplying };

inline constexpr QueryStyle kAllStyles[] = {QueryStyle::kRequesting, QueryStyle::kDescribing, QueryStyle::kImplying};

std::string_view style_name(QueryStyle s);
// Throws DataError for unknown names.
QueryStyle parse_style(std::string_view s);
TemplateId query_template(QueryStyle s);

struct GenPrompt {
  std::string dataset_id;
  TemplateId template_id = TemplateId::kDescribeV1;
  std::string text;

  friend bool operator==(const GenPrompt&, const GenPrompt&) = default;
};

inline constexpr std::string_view kWordLimitInstruction =
    "Please generate a descriptive summary of the dataset (max. 350 words).";

// Substitutes {name} placeholders in one pass; values are not rescanned. Throws ConfigError
// for a placeholder without a value.
std::string render_template(std::string_view tmpl, const std::map<std::string, std::string, std::less<>>& values);

// Title, size, headers and sample rows (head then tail), the publisher description when
// present, then the word-limit instruction. Without a sample only metadata is rendered.
GenPrompt build_description_prompt(const catalog::DatasetRecord& record,
                                   const std::optional<catalog::TableSample>& sample);

// The query generator sees only the dataset title and id.
GenPrompt build_query_prompt(const catalog::DatasetRecord& record, QueryStyle style);

}  // namespace mab::llmgen
