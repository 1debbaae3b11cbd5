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
#include <optional>
#include <string>
#include <vector>

#include "mab/catalog/record.hpp"
#include "mab/llmgen/sanitize.hpp"

namespace mab::catalog {

using Row = std::vector<std::string>;

// Header plus the first and last few data rows of a table, cells sanitized.
struct TableSample {
  std::size_t record_count = 0;
  std::vector<std::string> headers;
  std::vector<Row> head_rows;
  std::vector<Row> tail_rows;

  friend bool operator==(const TableSample&, const TableSample&) = default;
};

struct SampleOptions {
  std::size_t head_n = 3;
  std::size_t tail_n = 3;
  std::size_t cell_cap = llmgen::kDefaultCellCap;
  // 0 = sniff from the header line among ',', '\t', ';', '|'.
  char delimiter = 0;

  friend bool operator==(const SampleOptions&, const SampleOptions&) = default;
};

// Streams a delimiter-separated file with a header row. Tail rows never repeat a head row.
// Short rows are padded with empty cells and long rows cut to the header width.
// Throws SamplingError for unreadable, empty or headerless files.
TableSample sample_table(const std::filesystem::path& file, const SampleOptions& options = {});
TableSample sample_table_text(const std::string& content, const SampleOptions& options = {});

// Local file to sample for a record: the first structured distribution with a `path`,
// resolved against `base_dir`. Spreadsheets resolve to their CSV export (`x.xlsx.csv` or
// `x.csv`). Returns nullopt if nothing readable exists.
std::optional<std::filesystem::path> resolve_sample_source(const DatasetRecord& record,
                                                           const std::filesystem::path& base_dir);

}  // namespace mab::catalog
