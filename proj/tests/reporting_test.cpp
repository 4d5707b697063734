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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "leakaudit/pipeline.hpp"
#include "leakaudit/reporting.hpp"

using namespace leakaudit;
namespace fs = std::filesystem;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string temp_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir.string();
}

LeakageReport sample_report() {
  LeakageReport r;
  r.published_clusters = 54;
  r.total_canary_instances = 1835;
  r.leaked_instances = 51;
  r.per_canary_leak_rate = {51.0 / 1835.0, true};
  r.clusters_with_canaries = 52;
  r.clusters_leaking = 50;
  r.cluster_leak_rate = {50.0 / 52.0, true};
  r.pii_hits = {17, 20, 27};
  r.coherence = {0.6531234567890123, true};
  return r;
}

double row_field(const std::string& row, const std::string& key) {
  const auto pos = row.find(key + "=");
  REQUIRE(pos != std::string::npos);
  return std::stod(row.substr(pos + key.size() + 1));
}

}  // namespace

TEST_CASE("printed row fields equal the serialized report fields") {
  const auto report = sample_report();
  RunConfig cfg;
  const auto j = report_to_json(report, cfg);
  const std::string row = table_row(report);

  CHECK(row_field(row, "published") == j["published_clusters"].get<double>());
  CHECK(row_field(row, "canary_instances") ==
        j["total_canary_instances"].get<double>());
  CHECK(row_field(row, "leaked") == j["leaked_instances"].get<double>());
  CHECK(row_field(row, "leak_rate") == j["per_canary_leak_rate"].get<double>());
  CHECK(row_field(row, "cluster_leak_rate") ==
        j["cluster_leak_rate"].get<double>());
  CHECK(row_field(row, "coherence") == j["coherence"].get<double>());
  CHECK(j["table_row"].get<std::string>() == row);

  const auto pii_pos = row.find("pii=");
  REQUIRE(pii_pos != std::string::npos);
  CHECK(row.substr(pii_pos, 12) == "pii=17/20/27");
}

TEST_CASE("config labels name the active defenses") {
  RunConfig cfg;
  CHECK(config_label(cfg) == "example");
  cfg.k_min = 25;
  CHECK(config_label(cfg) == "example+kmin25");
  cfg.redact = true;
  CHECK(config_label(cfg) == "example+kmin25+redact");
  cfg.k_min = 0;
  cfg.summarizer = Strategy::keyword;
  CHECK(config_label(cfg) == "keyword+redact");
}

TEST_CASE("plot data covers every figure with zeros explicit") {
  const auto dir = temp_dir("leakaudit_plots");
  LeakageReport defended;
  defended.coherence = {0.66, true};
  const std::vector<LabeledReport> reports{
      {"example", sample_report()},
      {"example+kmin25+redact", defended},
  };
  emit_plot_data(reports, dir);

  const auto leak = slurp(dir + "/leak_rates.csv");
  CHECK(leak.find("label,per_canary_leak_rate,cluster_leak_rate\n") == 0);
  // two configs x two rates = four data values
  CHECK(leak.find("example,") != std::string::npos);
  CHECK(leak.find("example+kmin25+redact,0,0") != std::string::npos);

  const auto pii = slurp(dir + "/pii_hits.csv");
  CHECK(pii.find("example+kmin25+redact,0,0,0") != std::string::npos);
  CHECK(pii.find("example,17,20,27") != std::string::npos);

  const auto coh = slurp(dir + "/coherence.csv");
  CHECK(coh.find("example+kmin25+redact,0.66") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("single-report plot data has one row per figure") {
  const auto dir = temp_dir("leakaudit_plots_single");
  const std::vector<LabeledReport> reports{{"keyword", sample_report()}};
  emit_plot_data(reports, dir);
  const auto leak = slurp(dir + "/leak_rates.csv");
  std::int64_t lines = 0;
  for (const char ch : leak)
    if (ch == '\n') ++lines;
  CHECK(lines == 2);  // header + one row
  fs::remove_all(dir);
}

TEST_CASE("summaries round-trip through their record file") {
  const auto dir = temp_dir("leakaudit_summaries");
  std::vector<ClusterSummary> summaries(2);
  summaries[0] = {0, 40, Strategy::example, "Representative examples: (1) x",
                  true};
  summaries[1] = {1, 3, Strategy::example, "small cluster", false};
  const auto path = dir + "/summaries.jsonl";
  write_summaries(summaries, path);
  const auto loaded = read_summaries(path);
  REQUIRE(loaded.size() == 2);
  CHECK(loaded[0].cluster_id == 0);
  CHECK(loaded[0].size == 40);
  CHECK(loaded[0].published);
  CHECK(loaded[0].text == summaries[0].text);
  CHECK(!loaded[1].published);
  fs::remove_all(dir);
}

TEST_CASE("execute_run writes the full run directory") {
  const auto dir = temp_dir("leakaudit_run");
  const auto data = dir + "/corpus.jsonl";
  GenConfig gcfg;
  gcfg.n = 120;
  gcfg.topics = 4;
  gcfg.seed = 3;
  write_corpus(generate_corpus(gcfg), data);

  RunConfig cfg;
  cfg.data_path = data;
  cfg.out_dir = dir + "/run1";
  cfg.k = 4;
  cfg.min_df = 1;
  cfg.k_min = 10;
  cfg.redact = true;
  const auto result = execute_run(cfg);

  CHECK(fs::exists(cfg.out_dir + "/config.json"));
  CHECK(fs::exists(cfg.out_dir + "/summaries.jsonl"));
  CHECK(fs::exists(cfg.out_dir + "/report.json"));
  CHECK(fs::exists(cfg.out_dir + "/report_row.csv"));
  CHECK(fs::exists(cfg.out_dir + "/plots/leak_rates.csv"));
  CHECK(fs::exists(cfg.out_dir + "/plots/pii_hits.csv"));
  CHECK(fs::exists(cfg.out_dir + "/plots/coherence.csv"));

  const auto j = nlohmann::json::parse(slurp(cfg.out_dir + "/report.json"));
  CHECK(j["published_clusters"].get<std::int64_t>() ==
        result.report.published_clusters);
  CHECK(j["config"]["k_min"].get<std::int64_t>() == 10);
  CHECK(j["config"]["redact_pii"].get<bool>());
  fs::remove_all(dir);
}

TEST_CASE("identical configs produce byte-identical artifacts") {
  const auto dir = temp_dir("leakaudit_determinism");
  const auto data = dir + "/corpus.jsonl";
  GenConfig gcfg;
  gcfg.n = 150;
  gcfg.topics = 5;
  gcfg.seed = 9;
  write_corpus(generate_corpus(gcfg), data);

  RunConfig cfg;
  cfg.data_path = data;
  cfg.k = 5;
  cfg.min_df = 1;
  cfg.seed = 42;

  cfg.out_dir = dir + "/a";
  execute_run(cfg);
  const auto report_a = slurp(dir + "/a/report.json");
  const auto summaries_a = slurp(dir + "/a/summaries.jsonl");

  cfg.out_dir = dir + "/b";
  execute_run(cfg);
  // out_dir differs in config.json, so compare the data artifacts
  CHECK(slurp(dir + "/b/summaries.jsonl") == summaries_a);
  const auto ja = nlohmann::json::parse(report_a);
  const auto jb = nlohmann::json::parse(slurp(dir + "/b/report.json"));
  CHECK(ja["table_row"] == jb["table_row"]);
  fs::remove_all(dir);
}

TEST_CASE("unknown stage names are rejected") {
  GenConfig gcfg;
  gcfg.n = 10;
  const auto corpus = generate_corpus(gcfg);
  RunConfig cfg;
  cfg.embed = "bert";
  CHECK_THROWS_AS(run_pipeline(corpus, cfg), std::invalid_argument);
  cfg.embed = "tfidf";
  cfg.cluster = "hdbscan";
  CHECK_THROWS_AS(run_pipeline(corpus, cfg), std::invalid_argument);
}

TEST_CASE("keyword pipeline run never leaks under defaults") {
  GenConfig gcfg;
  gcfg.n = 400;
  gcfg.topics = 8;
  gcfg.seed = 21;
  const auto corpus = generate_corpus(gcfg);
  RunConfig cfg;
  cfg.summarizer = Strategy::keyword;
  const auto run = run_pipeline(corpus, cfg);
  CHECK(run.report.leaked_instances == 0);
}
