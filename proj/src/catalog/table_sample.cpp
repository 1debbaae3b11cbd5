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

#include "mab/catalog/table_sample.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <system_error>

#include "mab/common/error.hpp"
#include "mab/common/io.hpp"
#include "mab/common/text.hpp"

namespace mab::catalog {

namespace {

// RFC 4180 style reader: quoted fields may hold delimiters, doubled quotes and newlines.
class DelimitedReader {
 public:
  DelimitedReader(std::string_view data, char delim) : data_(data), delim_(delim) {
    if (data_.substr(0, 3) == "\xEF\xBB\xBF") pos_ = 3;
  }

  // False at end of input. Blank lines are skipped.
  bool next(std::vector<std::string>& fields) {
    while (pos_ < data_.size()) {
      fields.clear();
      const bool blank = read_record(fields);
      if (!blank) return true;
    }
    return false;
  }

 private:
  bool read_record(std::vector<std::string>& fields) {
    std::string field;
    bool quoted_any = false;
    while (pos_ < data_.size()) {
      const char c = data_[pos_];
      if (c == '"' && field.empty() && !quoted_any) {
        quoted_any = true;
        ++pos_;
        while (pos_ < data_.size()) {
          const char q = data_[pos_++];
          if (q == '"') {
            if (pos_ < data_.size() && data_[pos_] == '"') {
              field += '"';
              ++pos_;
            } else {
              break;
            }
          } else {
            field += q;
          }
        }
        continue;
      }
      if (c == delim_) {
        fields.push_back(std::move(field));
        field.clear();
        quoted_any = false;
        ++pos_;
        continue;
      }
      if (c == '\r' || c == '\n') {
        ++pos_;
        if (c == '\r' && pos_ < data_.size() && data_[pos_] == '\n') ++pos_;
        break;
      }
      field += c;
      ++pos_;
    }
    const bool blank = fields.empty() && field.empty() && !quoted_any;
    fields.push_back(std::move(field));
    return blank;
  }

  std::string_view data_;
  char delim_;
  std::size_t pos_ = 0;
};

char sniff_delimiter(std::string_view data) {
  const auto eol = data.find_first_of("\r\n");
  const auto line = data.substr(0, eol);
  constexpr std::array<char, 4> kCandidates = {',', '\t', ';', '|'};
  char best = ',';
  std::size_t best_count = 0;
  for (char cand : kCandidates) {
    std::size_t count = 0;
    bool in_quotes = false;
    for (char c : line) {
      if (c == '"') in_quotes = !in_quotes;
      if (!in_quotes && c == cand) ++count;
    }
    if (count > best_count) {
      best = cand;
      best_count = count;
    }
  }
  return best;
}

Row shape_row(std::vector<std::string>& raw, std::size_t width, std::size_t cap) {
  Row row;
  row.reserve(width);
  for (std::size_t i = 0; i < width; ++i) row.push_back(i < raw.size() ? llmgen::sanitize_cell(raw[i], cap) : "");
  return row;
}

}  // namespace

TableSample sample_table_text(const std::string& content, const SampleOptions& options) {
  if (text::is_blank(content)) throw SamplingError("table is empty");
  const char delim = options.delimiter ? options.delimiter : sniff_delimiter(content);
  DelimitedReader reader(content, delim);
  std::vector<std::string> fields;
  if (!reader.next(fields)) throw SamplingError("table has no header row");

  TableSample sample;
  for (const auto& h : fields) sample.headers.push_back(llmgen::sanitize_cell(h, options.cell_cap));
  if (std::all_of(sample.headers.begin(), sample.headers.end(), [](const auto& h) { return h.empty(); })) {
    throw SamplingError("table header row is empty");
  }
  const std::size_t width = sample.headers.size();

  std::deque<Row> tail;
  while (reader.next(fields)) {
    ++sample.record_count;
    if (sample.head_rows.size() < options.head_n) {
      sample.head_rows.push_back(shape_row(fields, width, options.cell_cap));
      continue;
    }
    if (options.tail_n == 0) continue;
    tail.push_back(shape_row(fields, width, options.cell_cap));
    if (tail.size() > options.tail_n) tail.pop_front();
  }
  sample.tail_rows.assign(tail.begin(), tail.end());
  return sample;
}

TableSample sample_table(const std::filesystem::path& file, const SampleOptions& options) {
  std::string content;
  try {
    content = io::read_file(file);
  } catch (const DataError& e) {
    throw SamplingError(e.what());
  }
  return sample_table_text(content, options);
}

std::optional<std::filesystem::path> resolve_sample_source(const DatasetRecord& record,
                                                           const std::filesystem::path& base_dir) {
  std::error_code ec;
  for (const auto& d : record.distributions) {
    if (!d.is_structured() || !d.path || text::is_blank(*d.path)) continue;
    std::filesystem::path p = *d.path;
    if (p.is_relative()) p = base_dir / p;
    const auto ext = text::to_lower(p.extension().string());
    if (ext == ".xlsx" || ext == ".xls") {
      auto exported = p;
      exported += ".csv";
      if (std::filesystem::is_regular_file(exported, ec)) return exported;
      exported = p;
      exported.replace_extension(".csv");
      if (std::filesystem::is_regular_file(exported, ec)) return exported;
      continue;
    }
    if (std::filesystem::is_regular_file(p, ec)) return p;
  }
  return std::nullopt;
}

}  // namespace mab::catalog
