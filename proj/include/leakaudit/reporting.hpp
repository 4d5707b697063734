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

#ifndef LEAKAUDIT_REPORTING_HPP
#define LEAKAUDIT_REPORTING_HPP

#include <span>
#include <string>
#include <vector>

#include "leakaudit/evaluate.hpp"
#include "leakaudit/pipeline.hpp"
#include "leakaudit/summarize.hpp"

#include "json.hpp"

namespace leakaudit {

// Shortest round-trip decimal representation (same value the JSON carries).
std::string double_to_string(double value);

nlohmann::json config_to_json(const RunConfig& cfg);
nlohmann::json report_to_json(const LeakageReport& report,
                              const RunConfig& cfg);

// The one-line results row printed to stdout; field values match the
// serialized report exactly.
std::string table_row(const LeakageReport& report);

// Single CSV row (with header) for cross-run aggregation.
std::string report_csv(const LeakageReport& report, const RunConfig& cfg);

struct LabeledReport {
  std::string label;
  LeakageReport report;
};

// Plot data for the leak-rate, PII-hit and coherence figures: one CSV per
// figure, one row per configuration, zeros written explicitly.
void emit_plot_data(std::span<const LabeledReport> reports,
                    const std::string& dir);

// config.json, summaries.jsonl, report.json, report_row.csv, plots/.
void write_run_dir(const RunConfig& cfg, const RunResult& result);

void write_summaries(const std::vector<ClusterSummary>& summaries,
                     const std::string& path);
std::vector<ClusterSummary> read_summaries(const std::string& path);

}  // namespace leakaudit

#endif  // LEAKAUDIT_REPORTING_HPP
