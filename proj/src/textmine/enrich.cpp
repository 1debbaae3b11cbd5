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

#include "mab/textmine/enrich.hpp"

#include <unordered_set>

#include "mab/common/error.hpp"
#include "mab/common/text.hpp"

namespace mab::textmine {

namespace {

void push_unique(std::vector<std::string>& out, std::unordered_set<std::string>& seen, const std::string& value) {
  if (text::is_blank(value)) return;
  if (seen.insert(text::to_lower(value)).second) out.push_back(value);
}

}  // namespace

EnrichmentContext build_enrichment_context(const std::vector<std::string>& docs, const EnrichParams& params,
                                           Gazetteer gazetteer) {
  EnrichmentContext ctx;
  ctx.gazetteer = std::move(gazetteer);
  ctx.stopwords = text::english_stopwords();
  std::vector<std::string> corpus;
  for (const auto& d : docs) {
    if (!text::is_blank(d)) corpus.push_back(d);
  }
  if (corpus.empty()) return ctx;
  try {
    ctx.tfidf = build_tfidf(corpus, params.min_df, ctx.stopwords);
  } catch (const DataError&) {
    return ctx;
  }
  ctx.lsa = lsa_fit(*ctx.tfidf, params.lsa_k, params.terms_per_topic);
  if (params.use_lda) {
    auto lda = params.lda;
    lda.m = params.terms_per_topic;
    ctx.lda = lda_fit(corpus, lda, ctx.stopwords);
  }
  return ctx;
}

Enrichment enrich_description(std::string_view text, const EnrichmentContext& context,
                              vectors::Embedder& embedder, const EnrichParams& params) {
  Enrichment out;
  if (text::is_blank(text)) return out;

  std::unordered_set<std::string> seen;
  for (const auto& k : extract_keyphrases(text, embedder, params.keyphrases, context.stopwords)) {
    push_unique(out.keywords, seen, k.text);
  }
  for (const auto& e : extract_entities(text, context.gazetteer)) push_unique(out.keywords, seen, e.surface);

  std::unordered_set<std::string> seen_topics;
  if (context.lsa && context.tfidf) {
    for (auto t : context.lsa->assign(context.tfidf->transform(text), params.topics_per_doc)) {
      push_unique(out.topics, seen_topics, context.lsa->topics.label(t));
    }
  }
  if (context.lda) {
    for (auto t : context.lda->assign(text, params.topics_per_doc)) {
      push_unique(out.topics, seen_topics, context.lda->topics.label(t));
    }
  }
  out.enriched = true;
  return out;
}

void enrich_records(std::vector<catalog::DatasetRecord>& records, DescriptionSource source,
                    vectors::Embedder& embedder, const EnrichParams& params, const Gazetteer& gazetteer) {
  const bool publisher = source == DescriptionSource::kPublisher;
  const auto description = [&](const catalog::DatasetRecord& r) -> std::string {
    const auto& d = publisher ? r.lds_description : r.llm_description;
    return d.value_or("");
  };
  std::vector<std::string> docs;
  for (const auto& r : records) docs.push_back(description(r));
  const auto context = build_enrichment_context(docs, params, gazetteer);
  const auto flag = publisher ? catalog::flag::kLdsNotEnriched : catalog::flag::kLlmNotEnriched;

  for (auto& r : records) {
    auto e = enrich_description(description(r), context, embedder, params);
    auto& keywords = publisher ? r.lds_desc_keywords : r.llm_desc_keywords;
    auto& topics = publisher ? r.lds_desc_topics : r.llm_desc_topics;
    keywords = std::move(e.keywords);
    topics = std::move(e.topics);
    if (e.enriched) {
      r.clear_flag(flag);
    } else {
      r.set_flag(flag);
    }
  }
}

}  // namespace mab::textmine
