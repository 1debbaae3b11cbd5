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

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "mab/common/error.hpp"
#include "mab/textmine/topics.hpp"

namespace mab::textmine {

namespace {

// mt19937_64 output is fully specified by the standard; the std distributions are not,
// so uniform draws are derived from raw bits.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }

 private:
  std::mt19937_64 engine_;
};

std::vector<std::size_t> ranked_desc(const std::vector<double>& score, std::size_t n) {
  std::vector<std::size_t> idx(score.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return score[a] > score[b]; });
  idx.resize(std::min(n, idx.size()));
  return idx;
}

}  // namespace

double LdaModel::phi(std::size_t topic, std::size_t word) const {
  const double v = static_cast<double>(vocabulary.size());
  return (topic_word[topic][word] + beta) / (topic_total[topic] + v * beta);
}

std::vector<std::size_t> LdaModel::assign(std::string_view text, std::size_t t) const {
  const std::size_t k = topic_total.size();
  std::vector<double> score(k, 0.0);
  bool any = false;
  for (const auto& tok : tokenize(text, stopwords)) {
    const auto it = std::lower_bound(vocabulary.begin(), vocabulary.end(), tok);
    if (it == vocabulary.end() || *it != tok) continue;
    any = true;
    const auto w = static_cast<std::size_t>(it - vocabulary.begin());
    for (std::size_t z = 0; z < k; ++z) score[z] += phi(z, w);
  }
  if (!any) return {};
  return ranked_desc(score, t);
}

LdaModel lda_fit(const std::vector<std::string>& docs, const LdaParams& params, const text::WordSet& stopwords) {
  if (params.k == 0) throw ConfigError("LDA needs k >= 1");
  if (params.iters == 0) throw ConfigError("LDA needs at least one sweep");
  if (params.m == 0) throw ConfigError("topics need at least one term");
  if (params.beta <= 0.0) throw ConfigError("LDA beta must be positive");
  const std::size_t k = params.k;

  std::vector<std::vector<std::string>> tokenized;
  std::map<std::string, std::size_t> vocab_index;
  for (const auto& d : docs) {
    tokenized.push_back(tokenize(d, stopwords));
    for (const auto& t : tokenized.back()) vocab_index.emplace(t, 0);
  }
  if (vocab_index.empty()) throw DataError("LDA corpus has no tokens");

  LdaModel model;
  model.stopwords = stopwords;
  model.alpha = params.alpha.value_or(50.0 / static_cast<double>(k));
  model.beta = params.beta;
  if (model.alpha <= 0.0) throw ConfigError("LDA alpha must be positive");
  for (auto& [term, idx] : vocab_index) {
    idx = model.vocabulary.size();
    model.vocabulary.push_back(term);
  }
  const std::size_t v = model.vocabulary.size();

  std::vector<std::vector<std::uint32_t>> words(tokenized.size());
  for (std::size_t d = 0; d < tokenized.size(); ++d) {
    for (const auto& t : tokenized[d]) words[d].push_back(static_cast<std::uint32_t>(vocab_index.at(t)));
  }

  Rng rng(params.seed);
  model.topic_word.assign(k, std::vector<std::uint32_t>(v, 0));
  model.topic_total.assign(k, 0);
  model.doc_topic.assign(words.size(), std::vector<std::uint32_t>(k, 0));
  std::vector<std::vector<std::uint32_t>> z(words.size());
  for (std::size_t d = 0; d < words.size(); ++d) {
    for (const auto w : words[d]) {
      const auto t = static_cast<std::uint32_t>(rng.below(k));
      z[d].push_back(t);
      ++model.topic_word[t][w];
      ++model.topic_total[t];
      ++model.doc_topic[d][t];
    }
  }

  const double vbeta = static_cast<double>(v) * model.beta;
  std::vector<double> cdf(k);
  for (std::size_t sweep = 0; sweep < params.iters; ++sweep) {
    for (std::size_t d = 0; d < words.size(); ++d) {
      auto& nd = model.doc_topic[d];
      for (std::size_t i = 0; i < words[d].size(); ++i) {
        const auto w = words[d][i];
        const auto old = z[d][i];
        --model.topic_word[old][w];
        --model.topic_total[old];
        --nd[old];
        double acc = 0.0;
        for (std::size_t t = 0; t < k; ++t) {
          acc += (nd[t] + model.alpha) * (model.topic_word[t][w] + model.beta) / (model.topic_total[t] + vbeta);
          cdf[t] = acc;
        }
        const double u = rng.uniform() * acc;
        std::size_t t = 0;
        while (t + 1 < k && cdf[t] <= u) ++t;
        z[d][i] = static_cast<std::uint32_t>(t);
        ++model.topic_word[t][w];
        ++model.topic_total[t];
        ++nd[t];
      }
    }
  }

  model.topics.method = TopicMethod::kLda;
  for (std::size_t t = 0; t < k; ++t) {
    // Within a topic phi is proportional to n_tw + beta, so ranking by count is exact.
    std::vector<double> counts(model.topic_word[t].begin(), model.topic_word[t].end());
    std::vector<std::string> terms;
    for (auto w : ranked_desc(counts, params.m)) terms.push_back(model.vocabulary[w]);
    model.topics.terms.push_back(std::move(terms));
  }
  return model;
}

TopicSet lda_topics(const std::vector<std::string>& docs, const LdaParams& params, const text::WordSet& stopwords) {
  return lda_fit(docs, params, stopwords).topics;
}

}  // namespace mab::textmine
