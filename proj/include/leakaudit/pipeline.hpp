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

#ifndef LEAKAUDIT_PIPELINE_HPP
#define LEAKAUDIT_PIPELINE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "leakaudit/corpus.hpp"
#include "leakaudit/evaluate.hpp"
#include "leakaudit/kmeans.hpp"
#include "leakaudit/summarize.hpp"
#include "leakaudit/tfidf.hpp"

namespace leakaudit {

struct RunConfig {
  std::string data_path;
  std::string out_dir;
  std::string embed = "tfidf";
  std::string cluster = "kmeans";
  Strategy summarizer = Strategy::example;
  std::optional<std::int32_t> k;  // default: default_k(n) clamped to n
  std::int64_t k_min = 0;
  bool redact = false;
  std::uint64_t seed = 0;
  int top_t = 10;
  int m = 2;
  int excerpt_len = 200;
  std::int64_t min_df = 2;
  int max_iter = 100;
  double tol = 1e-4;
  bool fail_on_leak = false;
};

// Short name of the configuration, used to label plot rows:
// e.g. "example", "keyword+kmin25+redact".
std::string config_label(const RunConfig& cfg);

struct RunResult {
  LeakageReport report;
  std::vector<ClusterSummary> summaries;  // published and suppressed
  ClusteringResult clustering;
  std::int32_t k_used = 0;
};

// embed -> cluster -> summarize -> defenses -> evaluation, in memory.
// Throws on invalid configuration or malformed input.
RunResult run_pipeline(const std::vector<Conversation>& corpus,
                       const RunConfig& cfg);

// Full command: reads the corpus, runs the pipeline, writes the run
// directory (config.json, summaries.jsonl, report.json, report_row.csv,
// plots/) and returns the result.
RunResult execute_run(const RunConfig& cfg);

}  // namespace leakaudit

#endif  // LEAKAUDIT_PIPELINE_HPP
