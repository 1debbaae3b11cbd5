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

#include "mab/cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <map>
#include <variant>

#include "mab/bench/ablation.hpp"
#include "mab/common/error.hpp"
#include "mab/common/io.hpp"
#include "mab/common/text.hpp"

namespace mab::cli {

namespace {

using Value = std::variant<std::string, double, bool, std::vector<std::string>>;

struct Entry {
  Value value;
  std::size_t line = 0;
};

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw ConfigError("config line " + std::to_string(line) + ": " + msg);
}

std::string parse_string(std::string_view& s, std::size_t line) {
  // s starts at the opening quote.
  std::string out;
  std::size_t i = 1;
  for (; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '"') break;
    if (c == '\\') {
      if (++i >= s.size()) fail(line, "dangling escape");
      switch (s[i]) {
        case 'n': out += '\n'; break;
        case 't': out += '\t'; break;
        case '"': out += '"'; break;
        case '\\': out += '\\'; break;
        default: fail(line, "unsupported escape");
      }
      continue;
    }
    out += c;
  }
  if (i >= s.size()) fail(line, "unterminated string");
  s.remove_prefix(i + 1);
  return out;
}

std::string_view strip_comment(std::string_view s) {
  bool in_str = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\\' && in_str) {
      ++i;
    } else if (s[i] == '"') {
      in_str = !in_str;
    } else if (s[i] == '#' && !in_str) {
      return s.substr(0, i);
    }
  }
  return s;
}

Value parse_value(std::string_view s, std::size_t line) {
  s = text::trim(s);
  if (s.empty()) fail(line, "missing value");
  if (s.front() == '"') {
    auto v = parse_string(s, line);
    if (!text::trim(s).empty()) fail(line, "trailing characters after string");
    return v;
  }
  if (s.front() == '[') {
    std::vector<std::string> items;
    s.remove_prefix(1);
    while (true) {
      s = text::trim(s);
      if (s.empty()) fail(line, "unterminated array");
      if (s.front() == ']') {
        s.remove_prefix(1);
        break;
      }
      if (s.front() != '"') fail(line, "arrays may only hold strings");
      items.push_back(parse_string(s, line));
      s = text::trim(s);
      if (!s.empty() && s.front() == ',') s.remove_prefix(1);
    }
    if (!text::trim(s).empty()) fail(line, "trailing characters after array");
    return items;
  }
  if (s == "true") return true;
  if (s == "false") return false;
  double d = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), d);
  if (ec != std::errc() || ptr != s.data() + s.size()) fail(line, "cannot parse value '" + std::string(s) + "'");
  return d;
}

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out + "\"";
}

std::string number(double d) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", d);
  return buf;
}

class Reader {
 public:
  explicit Reader(std::map<std::string, Entry> entries) : entries_(std::move(entries)) {}

  void str(const std::string& key, std::string& out) {
    if (auto* e = take(key)) out = as<std::string>(key, *e);
  }
  void path(const std::string& key, std::filesystem::path& out) {
    if (auto* e = take(key)) out = as<std::string>(key, *e);
  }
  void boolean(const std::string& key, bool& out) {
    if (auto* e = take(key)) out = as<bool>(key, *e);
  }
  void real(const std::string& key, double& out) {
    if (auto* e = take(key)) out = as<double>(key, *e);
  }
  template <class Int>
  void integer(const std::string& key, Int& out) {
    if (auto* e = take(key)) {
      const double d = as<double>(key, *e);
      if (d < 0 || d != static_cast<double>(static_cast<long long>(d))) {
        fail(e->line, "'" + key + "' must be a non-negative integer");
      }
      if (d > 9007199254740992.0) fail(e->line, "'" + key + "' exceeds 2^53");
      out = static_cast<Int>(d);
    }
  }
  void list(const std::string& key, std::vector<std::string>& out) {
    if (auto* e = take(key)) out = as<std::vector<std::string>>(key, *e);
  }
  void ms(const std::string& key, std::chrono::milliseconds& out) {
    long long v = out.count();
    integer(key, v);
    out = std::chrono::milliseconds(v);
  }

  void finish() const {
    for (const auto& [k, e] : entries_) {
      if (!used_.contains(k)) fail(e.line, "unknown key '" + k + "'");
    }
  }

 private:
  const Entry* take(const std::string& key) {
    const auto it = entries_.find(key);
    if (it == entries_.end()) return nullptr;
    used_.emplace(key, true);
    return &it->second;
  }

  template <class T>
  static const T& as(const std::string& key, const Entry& e) {
    if (const auto* v = std::get_if<T>(&e.value)) return *v;
    fail(e.line, "'" + key + "' has the wrong type");
  }

  std::map<std::string, Entry> entries_;
  std::map<std::string, bool> used_;
};

}  // namespace

RunConfig parse_config(std::string_view content) {
  std::map<std::string, Entry> entries;
  std::string section;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    auto end = content.find('\n', pos);
    if (end == std::string_view::npos) end = content.size();
    ++lineno;
    const auto line = text::trim(strip_comment(content.substr(pos, end - pos)));
    pos = end + 1;
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') fail(lineno, "malformed section header");
      section = std::string(text::trim(line.substr(1, line.size() - 2)));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) fail(lineno, "expected key = value");
    const auto key = std::string(text::trim(line.substr(0, eq)));
    if (key.empty()) fail(lineno, "empty key");
    const auto full = section.empty() ? key : section + "." + key;
    if (entries.contains(full)) fail(lineno, "duplicate key '" + full + "'");
    entries.emplace(full, Entry{parse_value(line.substr(eq + 1), lineno), lineno});
  }

  RunConfig c;
  Reader r(std::move(entries));
  r.path("catalog", c.catalog);
  r.str("catalog_format", c.catalog_format);
  r.path("out", c.out);
  r.list("stages", c.stages);
  r.str("conditions", c.conditions);
  r.integer("search_k", c.search_k);

  auto& t = c.textmine;
  r.integer("textmine.k", t.lsa_k);
  r.integer("textmine.m", t.terms_per_topic);
  r.integer("textmine.topics_per_doc", t.topics_per_doc);
  r.integer("textmine.min_df", t.min_df);
  r.integer("textmine.top_n", t.keyphrases.top_n);
  r.integer("textmine.ngram_max", t.keyphrases.ngram_max);
  r.real("textmine.mmr_lambda", t.keyphrases.mmr_lambda);
  r.path("textmine.gazetteer", c.gazetteer);
  r.boolean("textmine.lda", t.use_lda);
  r.integer("textmine.lda_k", t.lda.k);
  r.integer("textmine.lda_iters", t.lda.iters);
  r.integer("textmine.seed", t.lda.seed);
  double alpha = t.lda.alpha.value_or(-1.0);
  r.real("textmine.lda_alpha", alpha);
  t.lda.alpha = alpha > 0.0 ? std::optional<double>(alpha) : std::nullopt;
  r.real("textmine.lda_beta", t.lda.beta);

  r.integer("sample.head_n", c.sample.head_n);
  r.integer("sample.tail_n", c.sample.tail_n);
  r.integer("sample.cell_cap", c.sample.cell_cap);

  std::string backend(llmgen::backend_name(c.llm.kind));
  r.str("llm.backend", backend);
  c.llm.kind = llmgen::parse_backend(backend);
  r.str("llm.endpoint", c.llm.endpoint);
  r.str("llm.model", c.llm.model);
  r.str("llm.api_key_env", c.llm.api_key_env);
  r.integer("llm.max_retries", c.llm.max_retries);
  r.ms("llm.timeout_ms", c.llm.timeout);
  r.ms("llm.backoff_ms", c.llm.backoff);
  r.real("llm.temperature", c.llm.temperature);
  r.integer("llm.concurrency", c.llm.concurrency);

  std::string provider = c.embed.provider == EmbedProvider::kHash ? "hash" : "remote";
  r.str("embed.provider", provider);
  if (provider == "hash") {
    c.embed.provider = EmbedProvider::kHash;
  } else if (provider == "remote") {
    c.embed.provider = EmbedProvider::kRemote;
  } else {
    throw ConfigError("unknown embedder '" + provider + "' (expected hash or remote)");
  }
  r.integer("embed.dim", c.embed.dim);
  r.integer("embed.seed", c.embed.seed);
  r.str("embed.endpoint", c.embed.endpoint);
  r.str("embed.api_key_env", c.embed.api_key_env);
  r.integer("embed.batch_size", c.embed.batch_size);
  r.finish();
  return c;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::string content;
  try {
    content = io::read_file(path);
  } catch (const DataError& e) {
    throw ConfigError(e.what());
  }
  return parse_config(content);
}

std::string serialize_config(const RunConfig& c) {
  std::string out;
  const auto kv = [&](const std::string& k, const std::string& v) { out += k + " = " + v + "\n"; };
  const auto num = [&](const std::string& k, auto v) { kv(k, number(static_cast<double>(v))); };
  kv("catalog", quote(c.catalog.string()));
  kv("catalog_format", quote(c.catalog_format));
  kv("out", quote(c.out.string()));
  std::string stages = "[";
  for (std::size_t i = 0; i < c.stages.size(); ++i) stages += (i ? ", " : "") + quote(c.stages[i]);
  kv("stages", stages + "]");
  kv("conditions", quote(c.conditions));
  num("search_k", c.search_k);

  const auto& t = c.textmine;
  out += "\n[textmine]\n";
  num("k", t.lsa_k);
  num("m", t.terms_per_topic);
  num("topics_per_doc", t.topics_per_doc);
  num("min_df", t.min_df);
  num("top_n", t.keyphrases.top_n);
  num("ngram_max", t.keyphrases.ngram_max);
  num("mmr_lambda", t.keyphrases.mmr_lambda);
  kv("gazetteer", quote(c.gazetteer.string()));
  kv("lda", t.use_lda ? "true" : "false");
  num("lda_k", t.lda.k);
  num("lda_iters", t.lda.iters);
  num("seed", t.lda.seed);
  num("lda_alpha", t.lda.alpha.value_or(-1.0));
  num("lda_beta", t.lda.beta);

  out += "\n[sample]\n";
  num("head_n", c.sample.head_n);
  num("tail_n", c.sample.tail_n);
  num("cell_cap", c.sample.cell_cap);

  out += "\n[llm]\n";
  kv("backend", quote(llmgen::backend_name(c.llm.kind)));
  kv("endpoint", quote(c.llm.endpoint));
  kv("model", quote(c.llm.model));
  kv("api_key_env", quote(c.llm.api_key_env));
  num("max_retries", c.llm.max_retries);
  num("timeout_ms", c.llm.timeout.count());
  num("backoff_ms", c.llm.backoff.count());
  num("temperature", c.llm.temperature);
  num("concurrency", c.llm.concurrency);

  out += "\n[embed]\n";
  kv("provider", quote(c.embed.provider == EmbedProvider::kHash ? "hash" : "remote"));
  num("dim", c.embed.dim);
  num("seed", c.embed.seed);
  kv("endpoint", quote(c.embed.endpoint));
  kv("api_key_env", quote(c.embed.api_key_env));
  num("batch_size", c.embed.batch_size);
  return out;
}

void validate_config(const RunConfig& c) {
  if (c.catalog_format != "auto" && c.catalog_format != "json" && c.catalog_format != "jsonl") {
    throw ConfigError("catalog_format must be auto, json or jsonl");
  }
  for (const auto& s : c.stages) {
    if (std::find(kStageOrder.begin(), kStageOrder.end(), s) == kStageOrder.end()) {
      throw ConfigError("unknown stage '" + s + "'");
    }
  }
  bench::parse_condition_list(c.conditions);
  if (c.search_k == 0) throw ConfigError("search k must be at least 1");
  const auto& t = c.textmine;
  if (t.lsa_k == 0 || t.terms_per_topic == 0) throw ConfigError("textmine k and m must be at least 1");
  if (t.keyphrases.ngram_max == 0) throw ConfigError("ngram_max must be at least 1");
  if (t.keyphrases.mmr_lambda < 0.0 || t.keyphrases.mmr_lambda > 1.0) throw ConfigError("mmr_lambda must be in [0, 1]");
  if (t.lda.k == 0 || t.lda.iters == 0) throw ConfigError("lda_k and lda_iters must be at least 1");
  if (t.lda.beta <= 0.0) throw ConfigError("lda_beta must be positive");
  if (c.sample.cell_cap < 4) throw ConfigError("cell_cap must be at least 4");
  c.llm.validate();
  if (c.embed.provider == EmbedProvider::kHash && c.embed.dim < 8) throw ConfigError("embed dim must be at least 8");
  if (c.embed.provider == EmbedProvider::kRemote && c.embed.endpoint.empty()) {
    throw ConfigError("remote embedder needs an endpoint");
  }
  if (c.embed.batch_size == 0) throw ConfigError("embed batch_size must be positive");
}

}  // namespace mab::cli
