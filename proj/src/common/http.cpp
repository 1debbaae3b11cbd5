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

#include "mab/common/http.hpp"

#include <cstdlib>

#include <httplib.h>

#include "mab/common/error.hpp"

namespace mab::http {

std::pair<std::string, std::string> split_url(const std::string& url) {
  const auto sep = url.find("://");
  if (sep == std::string::npos) throw ConfigError("endpoint '" + url + "' is not an absolute URL");
  const auto scheme = url.substr(0, sep);
  if (scheme != "http" && scheme != "https") throw ConfigError("endpoint '" + url + "' must use http or https");
  const auto slash = url.find('/', sep + 3);
  if (slash == std::string::npos) return {url, "/"};
  return {url.substr(0, slash), url.substr(slash)};
}

Response post_json(const std::string& url, const std::string& body, const Headers& headers,
                   std::chrono::milliseconds timeout) {
  const auto [base, path] = split_url(url);
  httplib::Client client(base);
  const auto secs = std::chrono::duration_cast<std::chrono::seconds>(timeout);
  const auto usecs = std::chrono::duration_cast<std::chrono::microseconds>(timeout - secs);
  client.set_connection_timeout(secs.count(), usecs.count());
  client.set_read_timeout(secs.count(), usecs.count());
  client.set_write_timeout(secs.count(), usecs.count());
  httplib::Headers h;
  for (const auto& [k, v] : headers) h.emplace(k, v);
  auto res = client.Post(path, h, body, "application/json");
  if (!res) {
    throw BackendError("request to " + url + " failed: " + httplib::to_string(res.error()), 0, true);
  }
  return {res->status, res->body};
}

bool is_transient_status(int status) { return status >= 500 || status == 408 || status == 429; }

void add_bearer_from_env(Headers& headers, const std::string& env_var) {
  if (env_var.empty()) return;
  const char* key = std::getenv(env_var.c_str());
  if (key && *key) headers.emplace_back("Authorization", std::string("Bearer ") + key);
}

}  // namespace mab::http
