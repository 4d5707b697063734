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

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "leakaudit/corpus.hpp"
#include "leakaudit/pipeline.hpp"
#include "leakaudit/reporting.hpp"
#include "leakaudit/summarize.hpp"

namespace {

int cmd_generate(const std::string& out_path, const leakaudit::GenConfig& cfg) {
  const auto corpus = leakaudit::generate_corpus(cfg);
  leakaudit::write_corpus(corpus, out_path);
  std::int64_t canaries = 0, pii = 0;
  for (const auto& c : corpus) {
    canaries += static_cast<std::int64_t>(c.planted_canaries.size());
    pii += static_cast<std::int64_t>(c.planted_pii.size());
  }
  std::cout << "wrote " << out_path << ": n=" << corpus.size()
            << " canary_instances=" << canaries << " pii_strings=" << pii
            << "\n";
  return 0;
}

int cmd_run(const leakaudit::RunConfig& cfg) {
  const auto result = leakaudit::execute_run(cfg);
  std::cout << leakaudit::table_row(result.report) << "\n";
  if (cfg.fail_on_leak && result.report.leaked_instances > 0) {
    std::cerr << "fail_on_leak: " << result.report.leaked_instances
              << " leaked canary instances\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Canary and PII leakage audit for cluster-level summaries"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Write a synthetic corpus");
  std::string gen_out;
  leakaudit::GenConfig gen_cfg;
  gen->add_option("--out", gen_out, "Output corpus file (.jsonl)")->required();
  gen->add_option("--n", gen_cfg.n, "Number of conversations")
      ->check(CLI::PositiveNumber);
  gen->add_option("--topics", gen_cfg.topics, "Number of topic families")
      ->check(CLI::PositiveNumber);
  gen->add_option("--canary_rate", gen_cfg.canary_rate,
                  "Per-conversation canary probability")
      ->check(CLI::Range(0.0, 1.0));
  gen->add_option("--pii_rate", gen_cfg.pii_rate,
                  "Per-conversation PII probability")
      ->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", gen_cfg.seed, "Generator seed");

  // run
  auto* run = app.add_subcommand("run", "Run the audit pipeline");
  leakaudit::RunConfig run_cfg;
  std::string summarizer = "example";
  std::int32_t k_flag = -1;
  run->add_option("--data", run_cfg.data_path, "Corpus file")->required();
  run->add_option("--out", run_cfg.out_dir, "Run output directory")
      ->required();
  run->add_option("--embed", run_cfg.embed, "Embedding (tfidf)")
      ->check(CLI::IsMember({"tfidf"}));
  run->add_option("--cluster", run_cfg.cluster, "Clustering (kmeans)")
      ->check(CLI::IsMember({"kmeans"}));
  run->add_option("--summarizer", summarizer, "keyword or example")
      ->check(CLI::IsMember({"keyword", "example"}));
  run->add_option("--k", k_flag, "Cluster count override")
      ->check(CLI::PositiveNumber);
  run->add_option("--k_min", run_cfg.k_min,
                  "Minimum cluster size for publication (0 disables)")
      ->check(CLI::NonNegativeNumber);
  run->add_flag("--redact_pii", run_cfg.redact, "Redact published summaries");
  run->add_option("--seed", run_cfg.seed, "Clustering seed");
  run->add_option("--top_t", run_cfg.top_t, "Keyword summary term count")
      ->check(CLI::PositiveNumber);
  run->add_option("--m", run_cfg.m, "Extractive exemplar count")
      ->check(CLI::PositiveNumber);
  run->add_option("--excerpt_len", run_cfg.excerpt_len,
                  "Extractive excerpt length")
      ->check(CLI::PositiveNumber);
  run->add_option("--min_df", run_cfg.min_df, "Vocabulary min document freq")
      ->check(CLI::PositiveNumber);
  run->add_option("--max_iter", run_cfg.max_iter, "k-means iteration cap")
      ->check(CLI::PositiveNumber);
  run->add_option("--tol", run_cfg.tol, "k-means relative tolerance")
      ->check(CLI::NonNegativeNumber);
  run->add_flag("--fail_on_leak", run_cfg.fail_on_leak,
                "Exit nonzero when any canary leaks");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return cmd_generate(gen_out, gen_cfg);
    run_cfg.summarizer = leakaudit::strategy_from_string(summarizer);
    if (k_flag > 0) run_cfg.k = k_flag;
    return cmd_run(run_cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
