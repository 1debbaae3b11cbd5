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
#include <unordered_set>
#include <vector>

namespace mab::text {

using WordSet = std::unordered_set<std::string>;

std::string_view trim(std::string_view s);
bool is_blank(std::string_view s);
std::string to_lower(std::string_view s);

// Case-folded maximal runs of ASCII alphanumerics. Any other byte (punctuation, whitespace,
// non-ASCII UTF-8) separates tokens.
std::vector<std::string> words(std::string_view s);

// Whitespace-separated chunks, verbatim.
std::vector<std::string> split_whitespace(std::string_view s);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

// Frozen English stopword list (318 words), case-folded.
const WordSet& english_stopwords();

// Number of UTF-8 code points; invalid lead bytes count as one code point each.
std::size_t utf8_length(std::string_view s);

// Prefix holding at most `n` code points.
std::string_view utf8_prefix(std::string_view s, std::size_t n);

bool ends_with_icase(std::string_view s, std::string_view suffix);

}  // namespace mab::text
