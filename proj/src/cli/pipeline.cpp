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

#include "mab/cli/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mab/bench/ablation.hpp"
#include "mab/bench/metrics.hpp"
#include "mab/catalog/catalog.hpp"
#include "mab/common/error.hpp"
#include "mab/common/io.hpp"
#include "mab/llmgen/backend.hpp"
#include "mab/llmgen/generate.hpp"
#include "mab/textmine/enrich.hpp"
#include "mab/textmine/entities.hpp"
#include "mab/vectors/embedding.hpp"

namespace mab::cli {

namespace fs = std::filesystem;

namespace {

const char* producer_of(const std::string& artifact) {
  if (artifact == Artifacts::kCatalog || artifact == Artifacts::kStructured) return "ingest";
  if (artifact == Artifacts::kNlp) return "enrich-nlp";
  if (artifact == Artifacts::kEnriched) return "enrich-llm";
  if (artifact == Artifacts::kQueries) return "gen-queries";
  if (artifact == Artifacts::kReportJson) return "evaluate";
  return "an earlier";
}

fs::path require(const fs::path& path, const std::string& artifact) {
  if (!fs::exists(path)) {
    throw DataError("missing " + path.string() + ": run the " + producer_of(artifact) + " stage first");
  }
  return path;
}

std::vector<catalog::DatasetRecord> read_records(const fs::path& path) {
  return catalog::parse_catalog(path, catalog::CatalogFormat::kJsonl);
}

std::unique_ptr<vectors::Embedder> make_embedder(const EmbedConfig& c, const llmgen::GenBackendConfig& llm) {
  if (c.provider == EmbedProvider::kHash) return std::make_unique<vectors::HashEmbedder>(c.dim, c.seed);
  vectors::RemoteEmbedderConfig rc;
  rc.endpoint = c.endpoint;
  rc.api_key_env = c.api_key_env;
  rc.batch_size = c.batch_size;
  rc.max_retries = llm.max_retries;
  rc.backoff = llm.backoff;
  return std::make_unique<vectors::RemoteEmbedder>(rc);
}

textmine::Gazetteer gazetteer_for(const RunConfig& c) {
  return c.gazetteer.empty() ? textmine::default_gazetteer() : textmine::load_gazetteer(c.gazetteer);
}

class Runner {
 public:
  Runner(const RunConfig& c, std::ostream& log, bool verbose, const StageInputs& inputs)
      : c_(c), log_(log), verbose_(verbose), inputs_(inputs) {}

  void run(const std::string& stage) {
    const auto start = std::chrono::steady_clock::now();
    if (stage == "ingest") ingest();
    else if (stage == "analyze") analyze();
    else if (stage == "enrich-nlp") enrich_nlp();
    else if (stage == "enrich-llm") enrich_llm();
    else if (stage == "gen-queries") gen_queries();
    else if (stage == "evaluate") evaluate();
    else if (stage == "report") report();
    else throw ConfigError("unknown stage '" + stage + "'");
    if (verbose_) {
      const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
      log_ << "[" << stage << "] done in " << dt.count() << " s\n";
    }
  }

 private:
  fs::path out(const char* name) const { return c_.out / name; }

  void ingest() {
    auto fmt = c_.catalog_format == "json"    ? catalog::CatalogFormat::kArrayJson
               : c_.catalog_format == "jsonl" ? catalog::CatalogFormat::kJsonl
                                              : catalog::guess_format(c_.catalog);
    auto records = catalog::parse_catalog(c_.catalog, fmt);
    // Local resource paths are made absolute so later stages do not depend on the catalogue location.
    const auto base = fs::absolute(c_.catalog).parent_path();
    for (auto& r : records) {
      for (auto& d : r.distributions) {
        if (d.path && fs::path(*d.path).is_relative()) d.path = (base / *d.path).lexically_normal().string();
      }
    }
    const auto structured = catalog::filter_structured(records);
    catalog::write_jsonl(out(Artifacts::kCatalog), records);
    catalog::write_jsonl(out(Artifacts::kStructured), structured);
    log_ << "ingest: " << records.size() << " records, " << structured.size() << " with structured data\n";
  }

  void analyze() {
    const auto records = read_records(require(out(Artifacts::kCatalog), Artifacts::kCatalog));
    auto report = catalog::completeness_report(records, catalog::default_completeness_fields());
    io::write_file(out(Artifacts::kCompleteness), catalog::render_completeness_csv(report));
    log_ << "analyze: " << report.total_count << " records\n";
    for (const auto& f : report.fields) log_ << "  " << f.field << " " << f.fraction << "\n";
  }

  void enrich_nlp() {
    auto records = read_records(require(out(Artifacts::kStructured), Artifacts::kStructured));
    auto embedder = make_embedder(c_.embed, c_.llm);
    textmine::enrich_records(records, textmine::DescriptionSource::kPublisher, *embedder, c_.textmine,
                             gazetteer_for(c_));
    catalog::write_jsonl(out(Artifacts::kNlp), records);
    const auto n = std::count_if(records.begin(), records.end(),
                                 [](const auto& r) { return !r.has_flag(catalog::flag::kLdsNotEnriched); });
    log_ << "enrich-nlp: enriched " << n << " of " << records.size() << " descriptions\n";
  }

  void enrich_llm() {
    auto records = read_records(require(out(Artifacts::kNlp), Artifacts::kNlp));
    auto backend = llmgen::make_backend(c_.llm);
    llmgen::AuditLog audit(out(Artifacts::kAudit));
    llmgen::DescribeOptions opts;
    // Paths were absolutized at ingest; the base only matters for hand-written intermediate files.
    opts.base_dir = c_.catalog.empty() ? fs::current_path() : fs::absolute(c_.catalog).parent_path();
    opts.sample = c_.sample;
    const auto summary = llmgen::describe_records(records, *backend, c_.llm, opts, &audit);
    auto embedder = make_embedder(c_.embed, c_.llm);
    textmine::enrich_records(records, textmine::DescriptionSource::kGenerated, *embedder, c_.textmine,
                             gazetteer_for(c_));
    catalog::write_jsonl(out(Artifacts::kEnriched), records);
    log_ << "enrich-llm: generated " << summary.generated << ", failed " << summary.failed << ", without sample "
         << summary.without_sample << "\n";
  }

  void gen_queries() {
    const auto records = read_records(require(out(Artifacts::kStructured), Artifacts::kStructured));
    auto backend = llmgen::make_backend(c_.llm);
    llmgen::AuditLog audit(out(Artifacts::kAudit));
    const auto result = llmgen::generate_query_set(records, *backend, c_.llm, &audit);
    llmgen::write_queries(out(Artifacts::kQueries), result.queries);
    log_ << "gen-queries: " << result.queries.size() << " queries, " << result.excluded.size()
         << " datasets excluded\n";
  }

  void evaluate() {
    const auto enriched_path =
        inputs_.enriched.empty() ? require(out(Artifacts::kEnriched), Artifacts::kEnriched) : inputs_.enriched;
    const auto queries_path =
        inputs_.queries.empty() ? require(out(Artifacts::kQueries), Artifacts::kQueries) : inputs_.queries;
    const auto records = read_records(require(enriched_path, Artifacts::kEnriched));
    const auto queries = llmgen::read_queries(require(queries_path, Artifacts::kQueries));
    auto embedder = make_embedder(c_.embed, c_.llm);
    vectors::SearchParams params;
    params.k = c_.search_k;
    const auto result =
        bench::evaluate_matrix(records, queries, bench::parse_condition_list(c_.conditions), *embedder, params);
    std::string lines;
    for (const auto& o : result.outcomes) lines += bench::to_json(o).dump() + "\n";
    io::write_file(out(Artifacts::kOutcomes), lines);
    io::write_file(out(Artifacts::kReportJson), bench::to_json(result.report).dump(2) + "\n");
    log_ << "evaluate: " << queries.size() << " queries x " << result.report.conditions.size() << " conditions\n";
  }

  void report() {
    const auto j = nlohmann::json::parse(io::read_file(require(out(Artifacts::kReportJson), Artifacts::kReportJson)));
    const auto rep = bench::report_from_json(j);
    io::write_file(out(Artifacts::kReportMd), bench::render_report(rep, bench::ReportFormat::kMarkdown));
    io::write_file(out(Artifacts::kReportCsv), bench::render_report(rep, bench::ReportFormat::kCsv));
    log_ << "report: wrote " << out(Artifacts::kReportMd).string() << "\n";
  }

  const RunConfig& c_;
  std::ostream& log_;
  bool verbose_;
  StageInputs inputs_;
};

std::vector<std::string> ordered(const std::vector<std::string>& stages) {
  std::vector<std::string> out;
  for (const auto& s : kStageOrder) {
    if (std::find(stages.begin(), stages.end(), s) != stages.end()) out.push_back(s);
  }
  return out;
}

}  // namespace

void validate_paths(const RunConfig& c, const std::vector<std::string>& stages) {
  const auto wants = [&](const char* s) { return std::find(stages.begin(), stages.end(), s) != stages.end(); };
  if (wants("ingest")) {
    if (c.catalog.empty()) throw ConfigError("no catalogue given (set catalog or pass --catalog)");
    if (!fs::is_regular_file(c.catalog)) throw ConfigError("catalogue not found: " + c.catalog.string());
  }
  if (!c.gazetteer.empty() && !fs::is_regular_file(c.gazetteer)) {
    throw ConfigError("gazetteer not found: " + c.gazetteer.string());
  }
  if (c.out.empty()) throw ConfigError("output directory must not be empty");
  if (fs::exists(c.out) && !fs::is_directory(c.out)) {
    throw ConfigError("output path is not a directory: " + c.out.string());
  }
}

void run_pipeline(const RunConfig& config, const std::vector<std::string>& stages, std::ostream& log, bool verbose,
                  const StageInputs& inputs) {
  validate_config(config);
  const auto plan = ordered(stages);
  validate_paths(config, plan);
  Runner runner(config, log, verbose, inputs);
  for (const auto& s : plan) runner.run(s);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"mab: metadata augmentation benchmark", "mab"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_help_all_flag("--help-all");

  std::string config_path, out_dir, backend, endpoint, model, embedder, conditions, catalog_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> concurrency, k;
  std::optional<int> max_retries;
  bool verbose = false, dry_run = false, lda = false;
  StageInputs inputs;

  app.add_option("--config", config_path, "Config file");
  app.add_option("--out", out_dir, "Output directory");
  app.add_option("--seed", seed, "Seed for LDA sampling and the hash embedder");
  app.add_flag("--verbose,-v", verbose, "Log stage timings");
  app.add_flag("--dry-run", dry_run, "Print the stage plan and exit");
  app.add_option("--catalog", catalog_path, "Raw catalogue for ingest");
  app.add_option("--backend", backend, "LLM backend: mock or http");
  app.add_option("--endpoint", endpoint, "LLM endpoint URL");
  app.add_option("--model", model, "LLM model name");
  app.add_option("--concurrency", concurrency, "Concurrent LLM requests");
  app.add_option("--max-retries", max_retries, "Retries per LLM call");
  app.add_option("--embedder", embedder, "Embedder: hash or remote");
  app.add_option("--k", k, "Search depth");
  app.add_option("--conditions", conditions, "Ablation conditions (all or a comma list)");
  app.add_flag("--lda", lda, "Add LDA topics to the enrichment");

  std::vector<std::string> stages;
  for (const auto& name : kStageOrder) {
    auto* sub = app.add_subcommand(name, "Run the " + name + " stage");
    sub->callback([&stages, name] { stages = {name}; });
    if (name == "evaluate") {
      sub->add_option("--catalog", inputs.enriched, "Enriched catalogue (default <out>/enriched.jsonl)");
      sub->add_option("--queries", inputs.queries, "Query set (default <out>/queries.jsonl)");
    }
  }
  bool pipeline = false;
  app.add_subcommand("pipeline", "Run every configured stage")->callback([&] { pipeline = true; });

  std::vector<std::string> argv_tail(args.begin(), args.end());
  std::reverse(argv_tail.begin(), argv_tail.end());
  try {
    app.parse(argv_tail);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }

  try {
    RunConfig config = config_path.empty() ? RunConfig{} : load_config(config_path);
    if (!out_dir.empty()) config.out = out_dir;
    if (!catalog_path.empty()) config.catalog = catalog_path;
    if (seed) {
      config.textmine.lda.seed = *seed;
      config.embed.seed = *seed;
    }
    if (!backend.empty()) config.llm.kind = llmgen::parse_backend(backend);
    if (!endpoint.empty()) config.llm.endpoint = endpoint;
    if (!model.empty()) config.llm.model = model;
    if (concurrency) config.llm.concurrency = *concurrency;
    if (max_retries) config.llm.max_retries = *max_retries;
    if (!embedder.empty()) {
      if (embedder == "hash") config.embed.provider = EmbedProvider::kHash;
      else if (embedder == "remote") config.embed.provider = EmbedProvider::kRemote;
      else throw ConfigError("unknown embedder '" + embedder + "' (expected hash or remote)");
    }
    if (k) config.search_k = *k;
    if (!conditions.empty()) config.conditions = conditions;
    if (lda) config.textmine.use_lda = true;
    if (pipeline) stages = config.stages;

    validate_config(config);
    const auto plan = ordered(stages);
    validate_paths(config, plan);
    if (dry_run) {
      out << "plan:";
      for (const auto& s : plan) out << " " << s;
      out << "\nout: " << config.out.string() << "\n";
      return kOk;
    }
    fs::create_directories(config.out);
    run_pipeline(config, plan, out, verbose, inputs);
    return kOk;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const BackendError& e) {
    err << "backend error: " << e.what() << "\n";
    return kBackendError;
  } catch (const Error& e) {
    err << "data error: " << e.what() << "\n";
    return kDataError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace mab::cli
