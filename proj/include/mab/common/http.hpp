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
#include <string>
#include <utility>
#include <vector>

namespace mab::http {

using Headers = std::vector<std::pair<std::string, std::string>>;

struct Response {
  int status = 0;
  std::string body;
};

// Splits "scheme://host[:port]/path" into ("scheme://host[:port]", "/path").
// Throws ConfigError for anything else.
std::pair<std::string, std::string> split_url(const std::string& url);

// POSTs a JSON body. Transport failures throw a transient BackendError; any HTTP status is
// returned to the caller.
Response post_json(const std::string& url, const std::string& body, const Headers& headers,
                   std::chrono::milliseconds timeout);

// 5xx, 408 and 429 are worth retrying; other non-2xx statuses are not.
bool is_transient_status(int status);

// Adds "Authorization: Bearer <key>" when the named environment variable is set and non-empty.
void add_bearer_from_env(Headers& headers, const std::string& env_var);

}  // namespace mab::http
