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

#include <cstddef>
#include <string>
#include <string_view>

namespace mab::llmgen {

inline constexpr std::size_t kDefaultCellCap = 80;

// Whitespace (including newlines and tabs) collapsed to single spaces and trimmed. Results
// longer than `cap` code points keep cap-1 of them followed by U+2026. Requires cap >= 4.
std::string sanitize_cell(std::string_view raw, std::size_t cap = kDefaultCellCap);

}  // namespace mab::llmgen
