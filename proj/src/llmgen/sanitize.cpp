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

#include "mab/llmgen/sanitize.hpp"

#include "mab/common/error.hpp"
#include "mab/common/text.hpp"

namespace mab::llmgen {

std::string sanitize_cell(std::string_view raw, std::size_t cap) {
  if (cap < 4) throw ConfigError("cell truncation cap must be at least 4");
  std::string out = text::join(text::split_whitespace(raw), " ");
  if (text::utf8_length(out) > cap) {
    out = std::string(text::utf8_prefix(out, cap - 1));
    out += "…";
  }
  return out;
}

}  // namespace mab::llmgen
