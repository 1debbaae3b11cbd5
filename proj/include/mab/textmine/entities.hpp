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

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace mab::textmine {

enum class EntityLabel { kLoc, kOrg, kMisc };

std::string_view label_name(EntityLabel l);
// Throws ConfigError for anything but LOC / ORG / MISC.
EntityLabel parse_label(std::string_view s);

struct Entity {
  std::string surface;
  EntityLabel label = EntityLabel::kMisc;

  friend bool operator==(const Entity&, const Entity&) = default;
};

// Surfaces are verbatim substrings of the source; (surface, label) pairs are unique and
// appear in order of first occurrence.
using EntitySet = std::vector<Entity>;

// Exact, case-sensitive surface -> label.
using Gazetteer = std::map<std::string, EntityLabel, std::less<>>;

// London boroughs and a handful of public bodies.
const Gazetteer& default_gazetteer();

// Tab-separated "surface<TAB>label" lines; blank lines and '#' comments ignored.
Gazetteer load_gazetteer(const std::filesystem::path& path);

// Rule-based recognizer: maximal runs of capitalized words separated only by spaces, with
// "of"/"for"/"and" allowed between two capitalized words. Leading and trailing stopwords
// ("The", "In") are trimmed. Each run takes the label of the longest gazetteer entry
// matching a word-aligned part of it, else MISC. A lone MISC word opening a sentence is
// dropped.
EntitySet extract_entities(std::string_view doc, const Gazetteer& gazetteer);

}  // namespace mab::textmine
