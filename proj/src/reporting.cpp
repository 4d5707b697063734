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

#include "leakaudit/reporting.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace leakaudit {
namespace {

using nlohmann::json;

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << contents;
  if (!out) throw std::runtime_error("write failure: " + path);
}

}  // namespace

std::string double_to_string(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc{}) throw std::runtime_error("double formatting failed");
  return std::string(buf, ptr);
}

json config_to_json(const RunConfig& cfg) {
  json j;
  j["data"] = cfg.data_path;
  j["out"] = cfg.out_dir;
  j["embed"] = cfg.embed;
  j["cluster"] = cfg.cluster;
  j["summarizer"] = to_string(cfg.summarizer);
  if (cfg.k.has_value())
    j["k"] = *cfg.k;
  else
    j["k"] = nullptr;
  j["k_min"] = cfg.k_min;
  j["redact_pii"] = cfg.redact;
  j["seed"] = cfg.seed;
  j["top_t"] = cfg.top_t;
  j["m"] = cfg.m;
  j["excerpt_len"] = cfg.excerpt_len;
  j["min_df"] = cfg.min_df;
  j["max_iter"] = cfg.max_iter;
  j["tol"] = cfg.tol;
  j["fail_on_leak"] = cfg.fail_on_leak;
  return j;
}

json report_to_json(const LeakageReport& report, const RunConfig& cfg) {
  json j;
  j["published_clusters"] = report.published_clusters;
  j["total_canary_instances"] = report.total_canary_instances;
  j["leaked_instances"] = report.leaked_instances;
  j["per_canary_leak_rate"] = report.per_canary_leak_rate.value;
  j["per_canary_leak_rate_defined"] = report.per_canary_leak_rate.defined;
  j["clusters_with_canaries"] = report.clusters_with_canaries;
  j["clusters_leaking"] = report.clusters_leaking;
  j["cluster_leak_rate"] = report.cluster_leak_rate.value;
  j["cluster_leak_rate_defined"] = report.cluster_leak_rate.defined;
  j["pii_hits"] = {{"email", report.pii_hits.email},
                   {"phone", report.pii_hits.phone},
                   {"zip", report.pii_hits.zip}};
  j["coherence"] = report.coherence.value;
  j["coherence_defined"] = report.coherence.defined;
  std::vector<std::string> notes;
  if (!report.per_canary_leak_rate.defined)
    notes.push_back("per-canary leak rate undefined (no canary instances)");
  if (!report.cluster_leak_rate.defined)
    notes.push_back("cluster leak rate undefined (no canary clusters)");
  if (!report.coherence.defined)
    notes.push_back("coherence undefined (no published clusters)");
  j["notes"] = notes;
  j["table_row"] = table_row(report);
  j["config"] = config_to_json(cfg);
  return j;
}

std::string table_row(const LeakageReport& report) {
  std::string row;
  row += "published=" + std::to_string(report.published_clusters);
  row += " canary_instances=" + std::to_string(report.total_canary_instances);
  row += " leaked=" + std::to_string(report.leaked_instances);
  row += " leak_rate=" + double_to_string(report.per_canary_leak_rate.value);
  row += " clusters_with_canaries=" +
         std::to_string(report.clusters_with_canaries);
  row += " clusters_leaking=" + std::to_string(report.clusters_leaking);
  row += " cluster_leak_rate=" +
         double_to_string(report.cluster_leak_rate.value);
  row += " pii=" + std::to_string(report.pii_hits.email) + "/" +
         std::to_string(report.pii_hits.phone) + "/" +
         std::to_string(report.pii_hits.zip);
  row += " coherence=" + double_to_string(report.coherence.value);
  return row;
}

std::string report_csv(const LeakageReport& report, const RunConfig& cfg) {
  std::string csv =
      "label,published_clusters,total_canary_instances,leaked_instances,"
      "per_canary_leak_rate,clusters_with_canaries,clusters_leaking,"
      "cluster_leak_rate,pii_email,pii_phone,pii_zip,coherence\n";
  csv += config_label(cfg);
  csv += "," + std::to_string(report.published_clusters);
  csv += "," + std::to_string(report.total_canary_instances);
  csv += "," + std::to_string(report.leaked_instances);
  csv += "," + double_to_string(report.per_canary_leak_rate.value);
  csv += "," + std::to_string(report.clusters_with_canaries);
  csv += "," + std::to_string(report.clusters_leaking);
  csv += "," + double_to_string(report.cluster_leak_rate.value);
  csv += "," + std::to_string(report.pii_hits.email);
  csv += "," + std::to_string(report.pii_hits.phone);
  csv += "," + std::to_string(report.pii_hits.zip);
  csv += "," + double_to_string(report.coherence.value);
  csv += "\n";
  return csv;
}

void emit_plot_data(std::span<const LabeledReport> reports,
                    const std::string& dir) {
  std::filesystem::create_directories(dir);

  std::string leak = "label,per_canary_leak_rate,cluster_leak_rate\n";
  std::string pii = "label,email,phone,zip\n";
  std::string coh = "label,coherence\n";
  for (const auto& r : reports) {
    leak += r.label + "," +
            double_to_string(r.report.per_canary_leak_rate.value) + "," +
            double_to_string(r.report.cluster_leak_rate.value) + "\n";
    pii += r.label + "," + std::to_string(r.report.pii_hits.email) + "," +
           std::to_string(r.report.pii_hits.phone) + "," +
           std::to_string(r.report.pii_hits.zip) + "\n";
    coh += r.label + "," + double_to_string(r.report.coherence.value) + "\n";
  }
  write_file(dir + "/leak_rates.csv", leak);
  write_file(dir + "/pii_hits.csv", pii);
  write_file(dir + "/coherence.csv", coh);
}

void write_run_dir(const RunConfig& cfg, const RunResult& result) {
  std::filesystem::create_directories(cfg.out_dir);
  write_file(cfg.out_dir + "/config.json", config_to_json(cfg).dump(2) + "\n");
  write_summaries(result.summaries, cfg.out_dir + "/summaries.jsonl");
  write_file(cfg.out_dir + "/report.json",
             report_to_json(result.report, cfg).dump(2) + "\n");
  write_file(cfg.out_dir + "/report_row.csv", report_csv(result.report, cfg));
  const LabeledReport labeled{config_label(cfg), result.report};
  emit_plot_data({&labeled, 1}, cfg.out_dir + "/plots");
}

void write_summaries(const std::vector<ClusterSummary>& summaries,
                     const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  for (const auto& s : summaries) {
    json j;
    j["cluster_id"] = s.cluster_id;
    j["size"] = s.size;
    j["strategy"] = to_string(s.strategy);
    j["text"] = s.text;
    j["published"] = s.published;
    out << j.dump() << '\n';
  }
}

std::vector<ClusterSummary> read_summaries(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open summaries file: " + path);
  std::vector<ClusterSummary> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      const json j = json::parse(line);
      ClusterSummary s;
      s.cluster_id = j.at("cluster_id").get<std::int32_t>();
      s.size = j.at("size").get<std::int64_t>();
      s.strategy = strategy_from_string(j.at("strategy").get<std::string>());
      s.text = j.at("text").get<std::string>();
      s.published = j.at("published").get<bool>();
      out.push_back(std::move(s));
    } catch (const std::exception& e) {
      throw std::runtime_error("malformed summary record at line " +
                               std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace leakaudit
