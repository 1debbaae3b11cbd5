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

#include "mab/llmgen/backend.hpp"

#include "mab/common/error.hpp"
#include "mab/common/http.hpp"
#include "mab/common/text.hpp"

namespace mab::llmgen {

void GenBackendConfig::validate() const {
  if (max_retries < 0) throw ConfigError("llm max_retries must be >= 0");
  if (timeout.count() <= 0) throw ConfigError("llm timeout must be positive");
  if (concurrency == 0) throw ConfigError("llm concurrency must be at least 1");
  if (backoff.count() < 0) throw ConfigError("llm backoff must be >= 0");
  if (kind == BackendKind::kHttp) {
    if (endpoint.empty()) throw ConfigError("http llm backend needs an endpoint");
    http::split_url(endpoint);
  }
}

std::string_view backend_name(BackendKind k) { return k == BackendKind::kMock ? "mock" : "http"; }

BackendKind parse_backend(std::string_view s) {
  if (s == "mock") return BackendKind::kMock;
  if (s == "http") return BackendKind::kHttp;
  throw ConfigError("unknown llm backend '" + std::string(s) + "' (expected mock or http)");
}

std::string MockBackend::complete(const std::string& prompt, double) {
  auto words = text::split_whitespace(prompt);
  if (words.size() > kEchoWords) words.resize(kEchoWords);
  return text::join(words, " ");
}

HttpChatBackend::HttpChatBackend(GenBackendConfig config) : config_(std::move(config)) { config_.validate(); }

std::string HttpChatBackend::complete(const std::string& prompt, double temperature) {
  nlohmann::json body = {{"messages", {{{"role", "user"}, {"content", prompt}}}}, {"temperature", temperature}};
  if (!config_.model.empty()) body["model"] = config_.model;
  http::Headers headers;
  http::add_bearer_from_env(headers, config_.api_key_env);
  const auto res = http::post_json(config_.endpoint, body.dump(), headers, config_.timeout);
  if (res.status < 200 || res.status >= 300) {
    std::string detail = res.body.substr(0, 200);
    throw BackendError("llm endpoint returned HTTP " + std::to_string(res.status) + ": " + detail, res.status,
                       http::is_transient_status(res.status));
  }
  nlohmann::json reply;
  try {
    reply = nlohmann::json::parse(res.body);
  } catch (const nlohmann::json::parse_error&) {
    throw BackendError("llm endpoint returned malformed JSON", res.status, true);
  }
  if (const auto c = reply.find("choices"); c != reply.end() && c->is_array() && !c->empty()) {
    const auto& first = (*c)[0];
    if (first.contains("message") && first["message"].contains("content") && first["message"]["content"].is_string())
      return first["message"]["content"].get<std::string>();
    if (first.contains("text") && first["text"].is_string()) return first["text"].get<std::string>();
  }
  if (const auto t = reply.find("text"); t != reply.end() && t->is_string()) return t->get<std::string>();
  throw BackendError("llm reply has no completion text", res.status, true);
}

std::unique_ptr<TextBackend> make_backend(const GenBackendConfig& config) {
  config.validate();
  if (config.kind == BackendKind::kMock) return std::make_unique<MockBackend>();
  return std::make_unique<HttpChatBackend>(config);
}

AuditLog::AuditLog(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  out_.open(path, std::ios::app);
  if (!out_) throw DataError("cannot open audit log '" + path.string() + "'");
}

void AuditLog::append(nlohmann::json entry) {
  std::lock_guard lock(mutex_);
  if (out_.is_open()) {
    out_ << entry.dump() << '\n';
    out_.flush();
  }
  entries_.push_back(std::move(entry));
}

std::vector<nlohmann::json> AuditLog::entries() const {
  std::lock_guard lock(mutex_);
  return entries_;
}

}  // namespace mab::llmgen
