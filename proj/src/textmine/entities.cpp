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

#include "mab/textmine/entities.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "mab/common/error.hpp"
#include "mab/common/io.hpp"
#include "mab/common/text.hpp"

namespace mab::textmine {

namespace {

struct Word {
  std::size_t begin;
  std::size_t end;
};

bool alnum(char c) {
  const auto u = static_cast<unsigned char>(c);
  return u < 0x80 && std::isalnum(u);
}

// Alphanumeric runs, allowing single inner '-', '\'' or '&' between alphanumerics.
std::vector<Word> scan_words(std::string_view s) {
  std::vector<Word> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (!alnum(s[i])) {
      ++i;
      continue;
    }
    const std::size_t b = i;
    while (i < s.size()) {
      if (alnum(s[i])) {
        ++i;
      } else if ((s[i] == '-' || s[i] == '\'' || s[i] == '&') && i + 1 < s.size() && alnum(s[i + 1])) {
        ++i;
      } else {
        break;
      }
    }
    out.push_back({b, i});
  }
  return out;
}

bool capitalized(std::string_view w) { return !w.empty() && w[0] >= 'A' && w[0] <= 'Z'; }

// Start of text, or only whitespace since the last sentence terminator.
bool sentence_start(std::string_view s, std::size_t pos) {
  while (pos > 0) {
    const char c = s[--pos];
    if (c == '.' || c == '!' || c == '?' || c == '\n') return true;
    if (c != ' ' && c != '\t' && c != '\r' && c != '"' && c != '(') return false;
  }
  return true;
}

bool connector(std::string_view w) { return w == "of" || w == "for" || w == "and"; }

bool space_gap(std::string_view s, const Word& a, const Word& b) {
  if (b.begin <= a.end) return false;
  for (std::size_t i = a.end; i < b.begin; ++i) {
    if (s[i] != ' ' && s[i] != '\t') return false;
  }
  return true;
}

}  // namespace

std::string_view label_name(EntityLabel l) {
  switch (l) {
    case EntityLabel::kLoc: return "LOC";
    case EntityLabel::kOrg: return "ORG";
    case EntityLabel::kMisc: return "MISC";
  }
  return "MISC";
}

EntityLabel parse_label(std::string_view s) {
  if (s == "LOC") return EntityLabel::kLoc;
  if (s == "ORG") return EntityLabel::kOrg;
  if (s == "MISC") return EntityLabel::kMisc;
  throw ConfigError("unknown entity label '" + std::string(s) + "'");
}

const Gazetteer& default_gazetteer() {
  static const Gazetteer kGazetteer = [] {
    Gazetteer g;
    for (const char* loc :
         {"London", "Greater London", "City of London", "Inner London", "Outer London", "England", "UK",
          "United Kingdom", "Great Britain", "Barking and Dagenham", "Barnet", "Bexley", "Brent", "Bromley", "Camden",
          "Croydon", "Ealing", "Enfield", "Greenwich", "Hackney", "Hammersmith and Fulham", "Haringey", "Harrow",
          "Havering", "Hillingdon", "Hounslow", "Islington", "Kensington and Chelsea", "Kingston",
          "Lambeth", "Lewisham", "Merton", "Newham", "Redbridge", "Richmond", "Southwark", "Sutton",
          "Tower Hamlets", "Waltham Forest", "Wandsworth", "Westminster", "Thames"}) {
      g.emplace(loc, EntityLabel::kLoc);
    }
    for (const char* org :
         {"Greater London Authority", "GLA", "Transport for London", "TfL", "Metropolitan Police",
          "Metropolitan Police Service", "London Fire Brigade", "NHS", "Office for National Statistics", "ONS",
          "Mayor of London", "London Datastore", "Home Office", "Department for Education", "Environment Agency",
          "London Assembly", "Met Office"}) {
      g.emplace(org, EntityLabel::kOrg);
    }
    return g;
  }();
  return kGazetteer;
}

Gazetteer load_gazetteer(const std::filesystem::path& path) {
  std::istringstream in(io::read_file(path));
  Gazetteer g;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto t = text::trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto tab = t.find('\t');
    if (tab == std::string_view::npos) {
      throw ConfigError(path.string() + ":" + std::to_string(lineno) + ": expected surface<TAB>label");
    }
    g[std::string(text::trim(t.substr(0, tab)))] = parse_label(text::trim(t.substr(tab + 1)));
  }
  return g;
}

EntitySet extract_entities(std::string_view doc, const Gazetteer& gazetteer) {
  const auto words = scan_words(doc);
  const auto& stop = text::english_stopwords();
  const auto word_at = [&](std::size_t i) { return doc.substr(words[i].begin, words[i].end - words[i].begin); };
  const auto is_stop = [&](std::size_t i) { return stop.contains(text::to_lower(word_at(i))); };

  EntitySet out;
  std::size_t i = 0;
  while (i < words.size()) {
    if (!capitalized(word_at(i))) {
      ++i;
      continue;
    }
    std::size_t last = i;
    while (true) {
      const std::size_t nx = last + 1;
      if (nx < words.size() && space_gap(doc, words[last], words[nx]) && capitalized(word_at(nx))) {
        last = nx;
        continue;
      }
      if (nx + 1 < words.size() && connector(word_at(nx)) && space_gap(doc, words[last], words[nx]) &&
          space_gap(doc, words[nx], words[nx + 1]) && capitalized(word_at(nx + 1))) {
        last = nx + 1;
        continue;
      }
      break;
    }
    const std::size_t next = last + 1;

    std::size_t first = i;
    std::size_t end = last + 1;
    const auto trimmable = [&](std::size_t w) { return is_stop(w) || connector(word_at(w)); };
    while (first < end && trimmable(first)) ++first;
    while (end > first && trimmable(end - 1)) --end;
    if (first < end) {
      last = end - 1;
      const std::string_view surface = doc.substr(words[first].begin, words[last].end - words[first].begin);
      EntityLabel label = EntityLabel::kMisc;
      std::size_t best_len = 0;
      for (std::size_t a = first; a <= last; ++a) {
        for (std::size_t b = a; b <= last; ++b) {
          const auto span = doc.substr(words[a].begin, words[b].end - words[a].begin);
          if (span.size() <= best_len) continue;
          if (const auto it = gazetteer.find(span); it != gazetteer.end()) {
            best_len = span.size();
            label = it->second;
          }
        }
      }
      Entity e{std::string(surface), label};
      const bool lone_opener = first == last && label == EntityLabel::kMisc && sentence_start(doc, words[first].begin);
      if (!lone_opener && std::find(out.begin(), out.end(), e) == out.end()) out.push_back(std::move(e));
    }
    i = next;
  }
  return out;
}

}  // namespace mab::textmine
