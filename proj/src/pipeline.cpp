//
// Copyright 2026 The LeakAudit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "leakaudit/pipeline.hpp"

#include <algorithm>
#include <stdexcept>

#include "leakaudit/defenses.hpp"
#include "leakaudit/reporting.hpp"

namespace leakaudit {

std::string config_label(const RunConfig& cfg) {
  std::string label = to_string(cfg.summarizer);
  if (cfg.k_min > 0) label += "+kmin" + std::to_string(cfg.k_min);
  if (cfg.redact) label += "+redact";
  return label;
}

RunResult run_pipeline(const std::vector<Conversation>& corpus,
                       const RunConfig& cfg) {
  if (corpus.empty()) throw std::invalid_argument("empty corpus");
  if (cfg.embed != "tfidf")
    throw std::invalid_argument("unknown embedding: " + cfg.embed);
  if (cfg.cluster != "kmeans")
    throw std::invalid_argument("unknown clustering: " + cfg.cluster);
  if (cfg.k_min < 0) throw std::invalid_argument("k_min must be >= 0");

  const std::int64_t n = static_cast<std::int64_t>(corpus.size());
  const std::int32_t k =
      cfg.k.value_or(std::min<std::int32_t>(default_k(n),
                                            static_cast<std::int32_t>(n)));

  RunResult out;
  const Vocabulary vocab = fit_vocabulary(corpus, cfg.min_df);
  const CsrMatrix X = tfidf_transform(corpus, vocab);
  out.clustering = kmeans_fit(X, k, cfg.seed, cfg.max_iter, cfg.tol);
  out.k_used = out.clustering.k;

  for (std::int32_t c = 0; c < out.clustering.k; ++c) {
    const auto members = cluster_members(out.clustering, c);
    out.summaries.push_back(
        cfg.summarizer == Strategy::keyword
            ? summarize_keyword(c, members, X, vocab, cfg.top_t)
            : summarize_extractive(c, members, X, out.clustering.centroid(c),
                                   corpus, cfg.m, cfg.excerpt_len));
  }

  out.summaries = apply_defenses(std::move(out.summaries),
                                 {.k_min = cfg.k_min, .redact = cfg.redact});
  out.report = assemble_report(corpus, out.clustering, out.summaries, X);
  return out;
}

RunResult execute_run(const RunConfig& cfg) {
  const auto corpus = read_corpus(cfg.data_path);
  RunResult result = run_pipeline(corpus, cfg);
  if (!cfg.out_dir.empty()) write_run_dir(cfg, result);
  return result;
}

}  // namespace leakaudit
