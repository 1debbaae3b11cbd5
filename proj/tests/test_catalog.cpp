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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "mab/catalog/catalog.hpp"
#include "mab/catalog/table_sample.hpp"
#include "mab/common/error.hpp"
#include "mab/common/io.hpp"
#include "mab/common/text.hpp"
#include "support.hpp"

using namespace mab;
using namespace mab::catalog;

namespace {

std::vector<DatasetRecord> fixture() {
  return parse_catalog(testkit::fixture_catalog(), CatalogFormat::kArrayJson);
}

double fraction(const CompletenessReport& r, const std::string& field) {
  for (const auto& f : r.fields) {
    if (f.field == field) return f.fraction;
  }
  ADD_FAILURE() << "no field " << field;
  return -1;
}

}  // namespace

TEST(ParseCatalog, FixtureHasTwentyRecordsInOrder) {
  const auto records = fixture();
  ASSERT_EQ(records.size(), 20u);
  for (std::size_t i = 0; i < records.size(); ++i) {
    char want[8];
    std::snprintf(want, sizeof want, "f%03zu", i + 1);
    EXPECT_EQ(records[i].dataset_id, want);
    EXPECT_FALSE(records[i].lds_title.empty());
    EXPECT_TRUE(records[i].lds_desc_keywords.empty());
    EXPECT_FALSE(records[i].llm_description.has_value());
  }
}

TEST(ParseCatalog, JsonlMatchesArrayJson) {
  const auto jsonl = parse_catalog(testkit::data_dir() / "fixture" / "catalog.jsonl", CatalogFormat::kJsonl);
  EXPECT_EQ(jsonl, fixture());
}

TEST(ParseCatalog, EmptyArray) {
  EXPECT_TRUE(parse_catalog_text("[]", CatalogFormat::kArrayJson).empty());
  EXPECT_TRUE(parse_catalog_text("\n\n", CatalogFormat::kJsonl).empty());
}

TEST(ParseCatalog, DuplicateIdNamesBothEntries) {
  try {
    parse_catalog_text(R"([{"dataset_id":"x","lds_title":"a"},{"dataset_id":"y","lds_title":"b"},)"
                       R"({"dataset_id":"x","lds_title":"c"}])",
                       CatalogFormat::kArrayJson);
    FAIL();
  } catch (const LoadError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("'x'"), std::string::npos) << msg;
    EXPECT_NE(msg.find("entry 0"), std::string::npos) << msg;
    EXPECT_NE(msg.find("entry 2"), std::string::npos) << msg;
  }
}

TEST(ParseCatalog, MissingIdOrTitleReportsIndex) {
  try {
    parse_catalog_text(R"([{"dataset_id":"a","lds_title":"t"},{"lds_title":"t2"}])", CatalogFormat::kArrayJson);
    FAIL();
  } catch (const LoadError& e) {
    EXPECT_NE(std::string(e.what()).find("entry 1"), std::string::npos);
  }
  EXPECT_THROW(parse_catalog_text(R"([{"dataset_id":"a","lds_title":"  "}])", CatalogFormat::kArrayJson),
               LoadError);
}

TEST(ParseCatalog, MalformedJsonCarriesByteOffset) {
  const std::string doc = R"([{"dataset_id":"a","lds_title":"t"},)"
                          "\n"
                          R"( {"dataset_id": oops}])";
  try {
    parse_catalog_text(doc, CatalogFormat::kArrayJson);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_GT(e.offset(), doc.find("oops"));
    EXPECT_LE(e.offset(), doc.size());
  }
  const std::string lines = "{\"dataset_id\":\"a\",\"lds_title\":\"t\"}\n{broken\n";
  try {
    parse_catalog_text(lines, CatalogFormat::kJsonl);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_GE(e.offset(), lines.find("{broken"));
  }
}

TEST(ParseCatalog, ScalarBecomesOneElementList) {
  const auto r = parse_catalog_text(
      R"([{"dataset_id":"a","lds_title":"t","lds_keywords":"transport","lds_topic":"Transport",)"
      R"("distributions":{"url":"https://x.org/a.csv"}}])",
      CatalogFormat::kArrayJson);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].lds_keywords, std::vector<std::string>{"transport"});
  EXPECT_EQ(r[0].lds_topic, std::vector<std::string>{"Transport"});
  ASSERT_EQ(r[0].distributions.size(), 1u);
  EXPECT_FALSE(r[0].lds_description.has_value());
}

TEST(ParseCatalog, NumbersCoerceObjectsReject) {
  const auto r = parse_catalog_text(R"([{"dataset_id":17,"lds_title":"t","lds_keywords":[2021]}])",
                                    CatalogFormat::kArrayJson);
  EXPECT_EQ(r[0].dataset_id, "17");
  EXPECT_EQ(r[0].lds_keywords, std::vector<std::string>{"2021"});
  EXPECT_THROW(parse_catalog_text(R"([{"dataset_id":"a","lds_title":{"en":"t"}}])", CatalogFormat::kArrayJson),
               LoadError);
}

TEST(ParseCatalog, SerializeRoundTrip) {
  auto records = fixture();
  records[0].llm_description = "generated";
  records[0].llm_desc_keywords = {"a", "b"};
  records[1].set_flag(std::string(flag::kNoSample));
  std::ostringstream out;
  write_jsonl(out, records);
  EXPECT_EQ(parse_catalog_text(out.str(), CatalogFormat::kJsonl), records);
}

TEST(Distribution, StructuredByLabelThenExtension) {
  EXPECT_TRUE((Distribution{"https://x/a.pdf", "CSV", {}}.is_structured()));
  EXPECT_FALSE((Distribution{"https://x/a.csv", "PDF", {}}.is_structured()));
  EXPECT_TRUE((Distribution{"https://x/a.XLSX", {}, {}}.is_structured()));
  EXPECT_TRUE((Distribution{"https://x/a.xls?download=1", {}, {}}.is_structured()));
  EXPECT_FALSE((Distribution{"https://x/a.json", {}, {}}.is_structured()));
  EXPECT_FALSE((Distribution{"https://x/csv", {}, {}}.is_structured()));
}

TEST(Url, AbsoluteUrlValidity) {
  EXPECT_TRUE(is_valid_absolute_url("https://data.london.gov.uk/x.csv"));
  EXPECT_TRUE(is_valid_absolute_url("http://h:8080"));
  EXPECT_FALSE(is_valid_absolute_url("not a url"));
  EXPECT_FALSE(is_valid_absolute_url("/relative/path.csv"));
  EXPECT_FALSE(is_valid_absolute_url("https://"));
  EXPECT_FALSE(is_valid_absolute_url("https://exa mple.org/"));
}

TEST(Completeness, FixtureHandCounts) {
  const auto report = completeness_report(fixture(), default_completeness_fields());
  EXPECT_EQ(report.total_count, 20u);
  EXPECT_EQ(report.structured_count, 12u);
  EXPECT_DOUBLE_EQ(fraction(report, "lds_title"), 1.0);
  EXPECT_DOUBLE_EQ(fraction(report, "lds_topic"), 16.0 / 20);
  EXPECT_DOUBLE_EQ(fraction(report, "lds_description"), 0.5);
  EXPECT_DOUBLE_EQ(fraction(report, "download_link"), 18.0 / 20);
  EXPECT_DOUBLE_EQ(fraction(report, "lds_keywords"), 13.0 / 20);
}

TEST(Completeness, CsvFormat) {
  const auto csv = render_completeness_csv(completeness_report(fixture(), default_completeness_fields()));
  EXPECT_EQ(csv,
            "field,present,total,fraction\n"
            "lds_title,20,20,1.000\n"
            "lds_topic,16,20,0.800\n"
            "lds_description,10,20,0.500\n"
            "download_link,18,20,0.900\n"
            "lds_keywords,13,20,0.650\n");
}

TEST(Completeness, BlankCountsAbsentAndEmptyInputThrows) {
  DatasetRecord r;
  r.dataset_id = "a";
  r.lds_title = "t";
  r.lds_description = "   ";
  r.lds_keywords = {"", " "};
  const auto rep = completeness_report({r}, {"lds_description", "lds_keywords"});
  EXPECT_EQ(rep.fields[0].present, 0u);
  EXPECT_EQ(rep.fields[1].present, 0u);
  EXPECT_THROW(completeness_report({}, default_completeness_fields()), DataError);
  EXPECT_THROW(completeness_report({r}, {"no_such_field"}), ConfigError);
}

TEST(Completeness, InvariantUnderReordering) {
  auto records = fixture();
  const auto base = completeness_report(records, default_completeness_fields());
  std::mt19937 rng(7);
  for (int i = 0; i < 10; ++i) {
    std::shuffle(records.begin(), records.end(), rng);
    const auto r = completeness_report(records, default_completeness_fields());
    EXPECT_EQ(r.fields.size(), base.fields.size());
    for (std::size_t f = 0; f < r.fields.size(); ++f) EXPECT_EQ(r.fields[f].present, base.fields[f].present);
    EXPECT_EQ(r.structured_count, base.structured_count);
  }
}

TEST(FilterStructured, KeepsOrderAndIsIdempotent) {
  const auto records = fixture();
  const auto s = filter_structured(records);
  ASSERT_EQ(s.size(), 12u);
  for (std::size_t i = 0; i < s.size(); ++i) {
    char want[8];
    std::snprintf(want, sizeof want, "f%03zu", i + 1);
    EXPECT_EQ(s[i].dataset_id, want);
  }
  EXPECT_EQ(filter_structured(s), s);
  EXPECT_EQ(completeness_report(records, default_completeness_fields()).structured_count, s.size());
}

TEST(FilterStructured, PdfOnlyExcludedMixedIncluded) {
  DatasetRecord pdf{.dataset_id = "p", .lds_title = "t"};
  pdf.distributions = {{"https://x/a.pdf", "PDF", {}}};
  DatasetRecord mixed{.dataset_id = "m", .lds_title = "t"};
  mixed.distributions = {{"https://x/a.pdf", "PDF", {}}, {"https://x/a.csv", "CSV", {}}};
  const auto s = filter_structured({pdf, mixed});
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].dataset_id, "m");
}

TEST(Flags, SortedAndUnique) {
  DatasetRecord r;
  r.set_flag("b");
  r.set_flag("a");
  r.set_flag("b");
  EXPECT_EQ(r.flags, (std::vector<std::string>{"a", "b"}));
  EXPECT_TRUE(r.has_flag("a"));
  r.clear_flag("a");
  EXPECT_FALSE(r.has_flag("a"));
}

TEST(TableSample, FourRowFixtureHeadAndTailDoNotOverlap) {
  const auto s = sample_table(testkit::data_dir() / "fixture/files/police_force_strength.csv");
  EXPECT_EQ(s.record_count, 4u);
  EXPECT_EQ(s.headers, (std::vector<std::string>{"Borough", "Officers", "Special Constables"}));
  ASSERT_EQ(s.head_rows.size(), 3u);
  ASSERT_EQ(s.tail_rows.size(), 1u);
  EXPECT_EQ(s.head_rows[0][0], "Camden");
  EXPECT_EQ(s.head_rows[2][0], "Westminster");
  EXPECT_EQ(s.tail_rows[0], (Row{"Croydon", "655", "28"}));
}

TEST(TableSample, LongTableKeepsLastRows) {
  std::string csv = "n,v\n";
  for (int i = 1; i <= 50; ++i) csv += std::to_string(i) + ",x\n";
  const auto s = sample_table_text(csv, {.head_n = 2, .tail_n = 3});
  EXPECT_EQ(s.record_count, 50u);
  ASSERT_EQ(s.head_rows.size(), 2u);
  ASSERT_EQ(s.tail_rows.size(), 3u);
  EXPECT_EQ(s.tail_rows[0][0], "48");
  EXPECT_EQ(s.tail_rows[2][0], "50");
}

TEST(TableSample, OverlapBoundaries) {
  for (int n = 0; n <= 8; ++n) {
    std::string csv = "a\n";
    for (int i = 1; i <= n; ++i) csv += std::to_string(i) + "\n";
    const auto s = sample_table_text(csv, {.head_n = 3, .tail_n = 3});
    EXPECT_EQ(s.record_count, static_cast<std::size_t>(n));
    EXPECT_EQ(s.head_rows.size(), static_cast<std::size_t>(std::min(n, 3)));
    EXPECT_EQ(s.tail_rows.size(), static_cast<std::size_t>(std::clamp(n - 3, 0, 3)));
    if (!s.tail_rows.empty()) EXPECT_EQ(s.tail_rows.back()[0], std::to_string(n));
  }
}

TEST(TableSample, EmptyDataAndSanitizedCells) {
  const auto empty = sample_table_text("a,b\n");
  EXPECT_EQ(empty.record_count, 0u);
  EXPECT_TRUE(empty.head_rows.empty());
  EXPECT_TRUE(empty.tail_rows.empty());

  const auto s = sample_table_text("x,y\n\"a\nb  c\",2\n");
  ASSERT_EQ(s.head_rows.size(), 1u);
  EXPECT_EQ(s.head_rows[0][0], "a b c");
}

TEST(TableSample, RowsMatchHeaderWidthAndCellCap) {
  const std::string long_cell(200, 'z');
  const auto s = sample_table_text("a,b,c\n1\n1,2,3,4,5\n\"" + long_cell + "\",\"q\"\"uote\",\n", {.cell_cap = 10});
  for (const auto* rows : {&s.head_rows, &s.tail_rows}) {
    for (const auto& row : *rows) {
      EXPECT_EQ(row.size(), 3u);
      for (const auto& cell : row) EXPECT_LE(text::utf8_length(cell), 10u);
    }
  }
  EXPECT_EQ(s.head_rows[0], (Row{"1", "", ""}));
  EXPECT_EQ(s.head_rows[1], (Row{"1", "2", "3"}));
  EXPECT_EQ(s.head_rows[2][1], "q\"uote");
}

TEST(TableSample, SniffsDelimiterAndStripsBom) {
  const auto s = sample_table_text("\xEF\xBB\xBFname;count\nx;1\n");
  EXPECT_EQ(s.headers, (std::vector<std::string>{"name", "count"}));
  const auto t = sample_table_text("a\tb\n1\t2\n");
  EXPECT_EQ(t.head_rows[0], (Row{"1", "2"}));
}

TEST(TableSample, HeaderlessOrUnreadableIsSamplingError) {
  EXPECT_THROW(sample_table_text(""), SamplingError);
  EXPECT_THROW(sample_table_text("\n\n"), SamplingError);
  EXPECT_THROW(sample_table("/nonexistent/file.csv"), SamplingError);
}

TEST(TableSample, ResolvesSpreadsheetExport) {
  const auto records = fixture();
  const auto base = testkit::data_dir() / "fixture";
  const auto police = resolve_sample_source(records[0], base);
  ASSERT_TRUE(police.has_value());
  EXPECT_EQ(police->filename(), "police_force_strength.csv");
  const auto bus = resolve_sample_source(records[1], base);
  ASSERT_TRUE(bus.has_value());
  EXPECT_EQ(bus->filename(), "bus_ridership.xlsx.csv");
  EXPECT_FALSE(resolve_sample_source(records[4], base).has_value());
}
