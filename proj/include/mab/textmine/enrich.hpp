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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mab/catalog/record.hpp"
#include "mab/textmine/entities.hpp"
#include "mab/textmine/keyphrase.hpp"
#include "mab/textmine/tfidf.hpp"
#include "mab/textmine/topics.hpp"
#include "mab/vectors/embedding.hpp"

namespace mab::textmine {

struct EnrichParams {
  std::size_t lsa_k = 10;
  std::size_t terms_per_topic = 5;
  std::size_t topics_per_doc = 2;
  std::size_t min_df = 1;
  KeyphraseParams keyphrases;
  bool use_lda = false;
  LdaParams lda;

  friend bool operator==(const EnrichParams&, const EnrichParams&) = default;
};

// Corpus-level models shared by every description of one field (publisher or generated).
struct EnrichmentContext {
  // Unset when the corpus had no usable text.
  std::optional<TfidfModel> tfidf;
  std::optional<LsaModel> lsa;
  std::optional<LdaModel> lda;
  Gazetteer gazetteer;
  text::WordSet stopwords;
};

// Fits TF-IDF + LSA (and LDA when enabled) over the non-blank docs.
EnrichmentContext build_enrichment_context(const std::vector<std::string>& docs, const EnrichParams& params,
                                           Gazetteer gazetteer = default_gazetteer());

struct Enrichment {
  std::vector<std::string> keywords;
  std::vector<std::string> topics;
  bool enriched = false;
};

// keywords: keyphrases then entity surfaces, deduplicated case-insensitively.
// topics: labels of the text's top LSA topics, then its top LDA topics when enabled.
// Blank text gives an empty, not-enriched result.
Enrichment enrich_description(std::string_view text, const EnrichmentContext& context,
                              vectors::Embedder& embedder, const EnrichParams& params);

enum class DescriptionSource { kPublisher, kGenerated };

// Enriches lds_description -> lds_desc_* or llm_description -> llm_desc_* for every record,
// replacing previous values and maintaining the matching not-enriched flag.
void enrich_records(std::vector<catalog::DatasetRecord>& records, DescriptionSource source,
                    vectors::Embedder& embedder, const EnrichParams& params,
                    const Gazetteer& gazetteer = default_gazetteer());

}  // namespace mab::textmine
