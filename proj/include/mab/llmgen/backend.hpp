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

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include <json.hpp>

namespace mab::llmgen {

enum class BackendKind { kMock, kHttp };

struct GenBackendConfig {
  BackendKind kind = BackendKind::kMock;
  std::string endpoint;
  std::string model;
  std::string api_key_env = "MAB_LLM_API_KEY";
  int max_retries = 3;
  std::chrono::milliseconds timeout{60000};
  std::chrono::milliseconds backoff{500};
  double temperature = 0.0;
  std::size_t concurrency = 4;

  // Throws ConfigError when max_retries < 0, timeout <= 0, concurrency == 0, or an http
  // backend lacks an endpoint.
  void validate() const;

  friend bool operator==(const GenBackendConfig&, const GenBackendConfig&) = default;
};

std::string_view backend_name(BackendKind k);
BackendKind parse_backend(std::string_view s);

// complete(prompt, temperature) -> text. Failures throw BackendError; transient() marks
// the ones worth retrying.
class TextBackend {
 public:
  virtual ~TextBackend() = default;
  virtual std::string complete(const std::string& prompt, double temperature) = 0;
};

// Deterministic stand-in: echoes the first 350 whitespace-separated words of the prompt.
class MockBackend final : public TextBackend {
 public:
  static constexpr std::size_t kEchoWords = 350;
  std::string complete(const std::string& prompt, double temperature) override;
};

// OpenAI-style chat completions endpoint: {"model","messages","temperature"} ->
// choices[0].message.content. Bare {"text": ...} replies are accepted too.
class HttpChatBackend final : public TextBackend {
 public:
  explicit HttpChatBackend(GenBackendConfig config);
  std::string complete(const std::string& prompt, double temperature) override;

 private:
  GenBackendConfig config_;
};

std::unique_ptr<TextBackend> make_backend(const GenBackendConfig& config);

// Append-only JSONL audit trail of backend calls, safe to share across threads. Entries are
// written in completion order.
class AuditLog {
 public:
  AuditLog() = default;
  explicit AuditLog(const std::filesystem::path& path);

  void append(nlohmann::json entry);
  std::vector<nlohmann::json> entries() const;

 private:
  mutable std::mutex mutex_;
  std::ofstream out_;
  std::vector<nlohmann::json> entries_;
};

}  // namespace mab::llmgen
