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
#include <thread>

#include "mab/common/error.hpp"

namespace mab {

struct RetryPolicy {
  int max_retries = 3;
  std::chrono::milliseconds base_delay{500};

  // Exponential backoff: base, 2*base, 4*base, ...
  std::chrono::milliseconds delay_after(int attempt) const { return base_delay * (1LL << (attempt < 20 ? attempt : 20)); }
};

// Calls fn(attempt) until it returns. Transient BackendErrors are retried up to
// max_retries times; everything else propagates immediately.
template <class Fn>
auto retry_call(const RetryPolicy& policy, Fn&& fn) -> decltype(fn(0)) {
  for (int attempt = 0;; ++attempt) {
    try {
      return fn(attempt);
    } catch (const BackendError& e) {
      if (!e.transient() || attempt >= policy.max_retries) throw;
      std::this_thread::sleep_for(policy.delay_after(attempt));
    }
  }
}

}  // namespace mab
