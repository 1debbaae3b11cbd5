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

#include <sstream>

#include "mab/cli/config.hpp"
#include "mab/cli/pipeline.hpp"
#include "mab/common/error.hpp"
#include "mab/common/io.hpp"
#include "support.hpp"

namespace fs = std::filesystem;
using namespace mab;
using namespace mab::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<fs::path> listing(const fs::path& dir) {
  std::vector<fs::path> files;
  if (!fs::exists(dir)) return files;
  for (const auto& e : fs::directory_iterator(dir)) files.push_back(e.path().filename());
  std::sort(files.begin(), files.end());
  return files;
}

}  // namespace

TEST(Config, DefaultsAndRoundTrip) {
  RunConfig c;
  EXPECT_EQ(parse_config(""), c);
  EXPECT_EQ(parse_config(serialize_config(c)), c);
  c.catalog = "/data/cat.json";
  c.stages = {"ingest", "analyze"};
  c.conditions = "desc_llm,key_nlp";
  c.textmine.lsa_k = 7;
  c.textmine.keyphrases.mmr_lambda = 0.3;
  c.textmine.use_lda = true;
  c.textmine.lda.alpha = 0.125;
  c.textmine.lda.seed = (1ull << 53) - 1;
  c.gazetteer = "g \"quoted\".txt";
  c.llm.kind = llmgen::BackendKind::kHttp;
  c.llm.endpoint = "http://127.0.0.1:9/v1/chat/completions";
  c.llm.temperature = 0.1;
  c.llm.timeout = std::chrono::milliseconds(1234);
  c.embed.provider = EmbedProvider::kRemote;
  c.embed.endpoint = "http://127.0.0.1:9/embed";
  c.sample.cell_cap = 17;
  EXPECT_EQ(parse_config(serialize_config(c)), c);
}

TEST(Config, ParsesSections) {
  const auto c = parse_config(R"(# comment
catalog = "cat.jsonl"
stages = ["ingest", "analyze"]  # trailing
search_k = 3

[textmine]
k = 4
lda = true
lda_alpha = 0.5

[llm]
backend = "mock"
max_retries = 0
)");
  EXPECT_EQ(c.catalog, "cat.jsonl");
  EXPECT_EQ(c.stages, (std::vector<std::string>{"ingest", "analyze"}));
  EXPECT_EQ(c.search_k, 3u);
  EXPECT_EQ(c.textmine.lsa_k, 4u);
  EXPECT_TRUE(c.textmine.use_lda);
  EXPECT_EQ(c.textmine.lda.alpha, 0.5);
  EXPECT_EQ(c.llm.max_retries, 0);
}

TEST(Config, RejectsBadInput) {
  EXPECT_THROW(parse_config("nope = 1"), ConfigError);
  EXPECT_THROW(parse_config("[textmine]\nk = \"four\""), ConfigError);
  EXPECT_THROW(parse_config("search_k = -1"), ConfigError);
  EXPECT_THROW(parse_config("search_k = 2.5"), ConfigError);
  EXPECT_THROW(parse_config("search_k = 1e300"), ConfigError);
  EXPECT_THROW(parse_config("search_k = 1\nsearch_k = 2"), ConfigError);
  EXPECT_THROW(parse_config("[textmine\nk = 1"), ConfigError);
  EXPECT_THROW(parse_config("catalog = \"unterminated"), ConfigError);
  EXPECT_THROW(parse_config("[llm]\nbackend = \"carrier-pigeon\""), ConfigError);
  EXPECT_THROW(parse_config("[embed]\nprovider = \"magic\""), ConfigError);
  EXPECT_THROW(load_config("/nonexistent/mab.toml"), ConfigError);
}

TEST(Config, Validation) {
  RunConfig c;
  EXPECT_NO_THROW(validate_config(c));
  auto bad = c;
  bad.stages = {"ingest", "dance"};
  EXPECT_THROW(validate_config(bad), ConfigError);
  bad = c;
  bad.conditions = "desc_bogus";
  EXPECT_THROW(validate_config(bad), ConfigError);
  bad = c;
  bad.search_k = 0;
  EXPECT_THROW(validate_config(bad), ConfigError);
  bad = c;
  bad.llm.kind = llmgen::BackendKind::kHttp;
  EXPECT_THROW(validate_config(bad), ConfigError);
  bad = c;
  bad.embed.provider = EmbedProvider::kRemote;
  EXPECT_THROW(validate_config(bad), ConfigError);
}

TEST(Cli, UnknownConditionFailsBeforeWriting) {
  testkit::TempDir tmp;
  const auto out = tmp.path() / "out";
  const auto r = run({"pipeline", "--catalog", testkit::fixture_catalog().string(), "--out", out.string(),
                      "--conditions", "desc_original,desc_bogus"});
  EXPECT_EQ(r.code, kConfigError);
  EXPECT_NE(r.err.find("desc_bogus"), std::string::npos) << r.err;
  EXPECT_FALSE(fs::exists(out));
}

TEST(Cli, MissingCatalogIsConfigError) {
  testkit::TempDir tmp;
  EXPECT_EQ(run({"ingest", "--catalog", (tmp.path() / "absent.json").string(), "--out", tmp.path().string()}).code,
            kConfigError);
  EXPECT_EQ(run({"ingest", "--out", tmp.path().string()}).code, kConfigError);
  EXPECT_EQ(run({"--no-such-flag"}).code, kConfigError);
}

TEST(Cli, MissingPrerequisiteNamesProducer) {
  testkit::TempDir tmp;
  const auto e = run({"evaluate", "--out", tmp.path().string()});
  EXPECT_EQ(e.code, kDataError);
  EXPECT_NE(e.err.find("enrich-llm"), std::string::npos) << e.err;
  io::write_file(tmp.path() / "enriched.jsonl", "");
  const auto r = run({"evaluate", "--out", tmp.path().string()});
  EXPECT_EQ(r.code, kDataError);
  EXPECT_NE(r.err.find("gen-queries"), std::string::npos) << r.err;
  const auto a = run({"analyze", "--out", tmp.path().string()});
  EXPECT_EQ(a.code, kDataError);
  EXPECT_NE(a.err.find("ingest"), std::string::npos) << a.err;
}

TEST(Cli, MalformedCatalogIsDataError) {
  testkit::TempDir tmp;
  const auto cat = tmp.path() / "cat.json";
  io::write_file(cat, "[{\"dataset_id\": \"a\"},");
  const auto r = run({"ingest", "--catalog", cat.string(), "--out", (tmp.path() / "o").string()});
  EXPECT_EQ(r.code, kDataError);
}

TEST(Cli, DryRunTouchesNothing) {
  testkit::TempDir tmp;
  const auto out = tmp.path() / "out";
  const auto r = run({"pipeline", "--dry-run", "--catalog", testkit::fixture_catalog().string(), "--out",
                      out.string()});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("plan: ingest analyze enrich-nlp enrich-llm gen-queries evaluate report"),
            std::string::npos)
      << r.out;
  EXPECT_FALSE(fs::exists(out));
}

TEST(Cli, ConfigFileDrivesStages) {
  testkit::TempDir tmp;
  const auto cfg = tmp.path() / "mab.toml";
  io::write_file(cfg, "catalog = \"" + testkit::fixture_catalog().string() + "\"\nout = \"" +
                          (tmp.path() / "o").string() + "\"\nstages = [\"ingest\", \"analyze\"]\n");
  const auto r = run({"pipeline", "--config", cfg.string()});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(listing(tmp.path() / "o"),
            (std::vector<fs::path>{"catalog.jsonl", "completeness.csv", "structured.jsonl"}));
  io::write_file(cfg, "bogus = 1\n");
  EXPECT_EQ(run({"pipeline", "--config", cfg.string()}).code, kConfigError);
}

TEST(Cli, FullPipelineIsReproducible) {
  testkit::TempDir tmp;
  const auto a = tmp.path() / "a";
  const auto b = tmp.path() / "b";
  for (const auto& out : {a, b}) {
    const auto r = run({"pipeline", "--catalog", testkit::fixture_catalog().string(), "--out", out.string(),
                        "--lda", "--seed", "11"});
    ASSERT_EQ(r.code, kOk) << r.err;
  }
  const std::vector<fs::path> expected = {"catalog.jsonl", "completeness.csv", "enriched.jsonl", "llm_audit.jsonl",
                                          "nlp.jsonl",     "outcomes.jsonl",   "queries.jsonl",  "report.csv",
                                          "report.json",   "report.md",        "structured.jsonl"};
  EXPECT_EQ(listing(a), expected);
  for (const auto& f : expected) {
    if (f == "llm_audit.jsonl") continue;  // carries wall-clock latencies
    EXPECT_EQ(io::read_file(a / f), io::read_file(b / f)) << f;
  }
  const auto md = io::read_file(a / "report.md");
  EXPECT_NE(md.find("| desc_original |"), std::string::npos);
  EXPECT_NE(md.find("| onlytopic_llm |"), std::string::npos);
}

TEST(Cli, StageByStageMatchesPipeline) {
  testkit::TempDir tmp;
  const auto whole = tmp.path() / "whole";
  const auto steps = tmp.path() / "steps";
  ASSERT_EQ(run({"pipeline", "--catalog", testkit::fixture_catalog().string(), "--out", whole.string()}).code, kOk);
  ASSERT_EQ(run({"ingest", "--catalog", testkit::fixture_catalog().string(), "--out", steps.string()}).code, kOk);
  for (const char* s : {"analyze", "enrich-nlp", "enrich-llm", "gen-queries", "evaluate", "report"}) {
    const auto r = run({s, "--out", steps.string()});
    ASSERT_EQ(r.code, kOk) << s << ": " << r.err;
  }
  for (const char* f : {"enriched.jsonl", "queries.jsonl", "report.json", "report.md", "report.csv"}) {
    EXPECT_EQ(io::read_file(whole / f), io::read_file(steps / f)) << f;
  }
}

TEST(Cli, FlagOverrides) {
  testkit::TempDir tmp;
  const auto out = tmp.path() / "o";
  const auto r = run({"pipeline", "--catalog", testkit::fixture_catalog().string(), "--out", out.string(), "--k",
                      "3", "--conditions", "desc_original,key_nlp"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto md = io::read_file(out / "report.md");
  EXPECT_NE(md.find("(k = 3)"), std::string::npos) << md;
  EXPECT_NE(md.find("| key_nlp |"), std::string::npos);
  EXPECT_EQ(md.find("| desc_llm |"), std::string::npos);
  const auto csv = io::read_file(out / "report.csv");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1 + 2 * 4);
}

TEST(Cli, EvaluateAcceptsExplicitInputs) {
  testkit::TempDir tmp;
  const auto base = tmp.path() / "base";
  ASSERT_EQ(run({"pipeline", "--catalog", testkit::fixture_catalog().string(), "--out", base.string()}).code, kOk);
  const auto other = tmp.path() / "other";
  const auto r = run({"evaluate", "--out", other.string(), "--catalog", (base / "enriched.jsonl").string(),
                      "--queries", (base / "queries.jsonl").string()});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(io::read_file(base / "report.json"), io::read_file(other / "report.json"));
}

TEST(Cli, HttpBackendWithoutEndpointIsConfigError) {
  testkit::TempDir tmp;
  EXPECT_EQ(run({"pipeline", "--catalog", testkit::fixture_catalog().string(), "--out", tmp.path().string(),
                 "--backend", "http"})
                .code,
            kConfigError);
}
