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

#include <cmath>
#include <string>
#include <vector>

#include "leakaudit/evaluate.hpp"
#include "leakaudit/pipeline.hpp"
#include "leakaudit/rng.hpp"

using namespace leakaudit;

namespace {

// Naive character-by-character substring scan, independent of std::string.
bool naive_contains(const std::string& haystack, const std::string& needle) {
  if (needle.empty()) return true;
  if (needle.size() > haystack.size()) return false;
  for (std::size_t i = 0; i + needle.size() <= haystack.size(); ++i) {
    bool match = true;
    for (std::size_t j = 0; j < needle.size(); ++j)
      if (haystack[i + j] != needle[j]) {
        match = false;
        break;
      }
    if (match) return true;
  }
  return false;
}

CsrMatrix matrix_from_rows(const std::vector<std::vector<double>>& rows) {
  CsrMatrix m;
  m.rows = rows.size();
  m.cols = rows.empty() ? 0 : rows[0].size();
  m.row_start.push_back(0);
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size(); ++c)
      if (r[c] != 0.0) {
        m.col.push_back(static_cast<std::int32_t>(c));
        m.val.push_back(r[c]);
      }
    m.row_start.push_back(m.col.size());
  }
  return m;
}

// Clustering assembled by hand: assignments plus mean centroids.
ClusteringResult manual_clustering(const CsrMatrix& X,
                                   std::vector<std::int32_t> assignments,
                                   std::int32_t k) {
  ClusteringResult r;
  r.k = k;
  r.dim = X.cols;
  r.assignments = std::move(assignments);
  r.centroids.assign(static_cast<std::size_t>(k) * X.cols, 0.0);
  std::vector<std::int64_t> counts(static_cast<std::size_t>(k), 0);
  for (std::size_t i = 0; i < X.rows; ++i) {
    const auto cols = X.row_cols(i);
    const auto vals = X.row_vals(i);
    const std::size_t c = static_cast<std::size_t>(r.assignments[i]);
    for (std::size_t j = 0; j < cols.size(); ++j)
      r.centroids[c * X.cols + static_cast<std::size_t>(cols[j])] += vals[j];
    ++counts[c];
  }
  for (std::int32_t c = 0; c < k; ++c)
    for (std::size_t d = 0; d < X.cols; ++d)
      r.centroids[static_cast<std::size_t>(c) * X.cols + d] /=
          static_cast<double>(counts[static_cast<std::size_t>(c)]);
  return r;
}

std::string random_text(Rng& rng, std::size_t len) {
  static const std::string alphabet = "abcde 0123.@-+";
  std::string s;
  for (std::size_t i = 0; i < len; ++i)
    s += alphabet[rng.below(alphabet.size())];
  return s;
}

}  // namespace

TEST_CASE("exact canary leak counting") {
  std::vector<CanaryRecord> canaries{
      {CanaryKind::email, "alex.patel.42157@example.com"}};
  auto [leaked, total] = exact_canary_leaks(
      "summary quoting alex.patel.42157@example.com here", canaries);
  CHECK(leaked == 1);
  CHECK(total == 1);

  auto [l2, t2] = exact_canary_leaks("nothing here", {});
  CHECK(l2 == 0);
  CHECK(t2 == 0);
}

TEST_CASE("exact canary leaks match a naive substring oracle") {
  Rng rng(12);
  for (int rep = 0; rep < 200; ++rep) {
    const std::string summary = random_text(rng, 5 + rng.below(90));
    std::vector<CanaryRecord> canaries;
    for (int c = 0; c < 10; ++c) {
      const std::size_t len = 1 + rng.below(6);
      canaries.push_back({CanaryKind::phrase, random_text(rng, len)});
    }
    std::int64_t expect = 0;
    for (const auto& c : canaries)
      if (naive_contains(summary, c.value)) ++expect;
    const auto [leaked, total] = exact_canary_leaks(summary, canaries);
    CHECK(leaked == expect);
    CHECK(total == 10);
  }
}

TEST_CASE("per-canary and cluster leak rates on a constructed view") {
  Conversation a;
  a.id = 0;
  a.text = "txt";
  a.planted_canaries = {{CanaryKind::phone, "+1-415-555-0134"}};
  Conversation b;
  b.id = 1;
  b.text = "txt";
  b.planted_canaries = {{CanaryKind::phone, "+1-415-555-9999"}};
  Conversation c;
  c.id = 2;
  c.text = "txt";  // no canary

  ClusterSummary leaky;
  leaky.cluster_id = 0;
  leaky.size = 2;
  leaky.text = "quoting +1-415-555-0134 only";
  ClusterSummary clean;
  clean.cluster_id = 1;
  clean.size = 1;
  clean.text = "nothing sensitive";

  std::vector<ClusterView> views(2);
  views[0].summary = &leaky;
  views[0].members = {&a, &b};
  views[1].summary = &clean;
  views[1].members = {&c};

  const auto canary_stats = per_canary_leak_rate(views);
  CHECK(canary_stats.leaked == 1);
  CHECK(canary_stats.total == 2);
  CHECK(canary_stats.rate.defined);
  CHECK(canary_stats.rate.value == doctest::Approx(0.5).epsilon(1e-15));

  const auto cluster_stats = cluster_leak_rate(views);
  CHECK(cluster_stats.with_canaries == 1);
  CHECK(cluster_stats.leaking == 1);
  CHECK(cluster_stats.rate.value == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("single conversation leaking its own canary rates 1.0") {
  Conversation a;
  a.id = 0;
  a.text = "body";
  a.planted_canaries = {{CanaryKind::phrase, "canary-phrase-00112233"}};
  ClusterSummary s;
  s.cluster_id = 0;
  s.size = 1;
  s.text = "the canary-phrase-00112233 appears";
  std::vector<ClusterView> views(1);
  views[0].summary = &s;
  views[0].members = {&a};
  CHECK(per_canary_leak_rate(views).rate.value == 1.0);
  CHECK(cluster_leak_rate(views).rate.value == 1.0);
}

TEST_CASE("zero denominators are flagged, not failed") {
  const auto canary_stats = per_canary_leak_rate({});
  CHECK(!canary_stats.rate.defined);
  CHECK(canary_stats.rate.value == 0.0);
  const auto cluster_stats = cluster_leak_rate({});
  CHECK(!cluster_stats.rate.defined);
  CHECK(cluster_stats.rate.value == 0.0);
}

TEST_CASE("pii indicator counts") {
  ClusterSummary s;
  s.cluster_id = 0;
  s.size = 1;
  s.text = "a@b.com and 94103";
  std::vector<ClusterView> views(1);
  views[0].summary = &s;
  const auto counts = pii_indicator_counts(views);
  CHECK(counts.email == 1);
  CHECK(counts.phone == 0);
  CHECK(counts.zip == 1);

  CHECK(pii_indicator_counts({}) == PiiCounts{});
}

TEST_CASE("coherence of identical vectors is 1") {
  const auto X = matrix_from_rows({{0.6, 0.8}, {0.6, 0.8}, {0.6, 0.8}});
  const auto clustering = manual_clustering(X, {0, 0, 0}, 1);
  const std::vector<std::int32_t> ids{0};
  CHECK(coherence(clustering, X, ids) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("coherence of k orthogonal one-hots is 1/sqrt(k)") {
  const auto X = matrix_from_rows(
      {{1.0, 0, 0, 0}, {0, 1.0, 0, 0}, {0, 0, 1.0, 0}});
  const auto clustering = manual_clustering(X, {0, 0, 0}, 1);
  const std::vector<std::int32_t> ids{0};
  CHECK(std::abs(coherence(clustering, X, ids) - 1.0 / std::sqrt(3.0)) <=
        1e-12);
}

TEST_CASE("three-cluster toy matches the hand-computed coherence") {
  const auto X = matrix_from_rows({
      {1.0, 0.0, 0.0, 0.0},
      {1.0, 0.0, 0.0, 0.0},
      {1.0, 0, 0, 0},
      {0, 1.0, 0, 0},
      {0, 0, 1.0, 0},
      {0.6, 0.8, 0, 0},
      {0, 0.8, 0.6, 0},
      {0.0, 1.0, 0.0, 0.0},
  });
  const auto clustering = manual_clustering(X, {0, 0, 1, 1, 1, 2, 2, 2}, 3);
  const std::vector<std::int32_t> ids{0, 1, 2};
  // (1.0 + 0.5773502691896257 + 0.9116529554118228) / 3
  CHECK(std::abs(coherence(clustering, X, ids) - 0.8296677415338162) <=
        1e-9);
}

TEST_CASE("coherence requires at least one cluster") {
  const auto X = matrix_from_rows({{1.0}});
  const auto clustering = manual_clustering(X, {0}, 1);
  CHECK_THROWS_AS(coherence(clustering, X, {}), std::invalid_argument);
}

TEST_CASE("rates are invariant under cluster relabeling") {
  GenConfig gcfg;
  gcfg.n = 60;
  gcfg.topics = 4;
  gcfg.seed = 5;
  const auto corpus = generate_corpus(gcfg);
  RunConfig rcfg;
  rcfg.summarizer = Strategy::example;
  rcfg.k = 3;
  rcfg.min_df = 1;
  const auto run = run_pipeline(corpus, rcfg);

  // relabel clusters by reversing ids everywhere
  ClusteringResult relabeled = run.clustering;
  const std::int32_t k = relabeled.k;
  for (auto& a : relabeled.assignments) a = k - 1 - a;
  std::vector<double> centroids(relabeled.centroids.size());
  for (std::int32_t c = 0; c < k; ++c)
    std::copy_n(run.clustering.centroids.data() +
                    static_cast<std::size_t>(c) * relabeled.dim,
                relabeled.dim,
                centroids.data() +
                    static_cast<std::size_t>(k - 1 - c) * relabeled.dim);
  relabeled.centroids = std::move(centroids);
  std::vector<ClusterSummary> summaries = run.summaries;
  for (auto& s : summaries) s.cluster_id = k - 1 - s.cluster_id;

  const auto vocab = fit_vocabulary(corpus, rcfg.min_df);
  const auto X = tfidf_transform(corpus, vocab);
  const auto a = assemble_report(corpus, run.clustering, run.summaries, X);
  const auto b = assemble_report(corpus, relabeled, summaries, X);
  CHECK(a.per_canary_leak_rate.value == b.per_canary_leak_rate.value);
  CHECK(a.cluster_leak_rate.value == b.cluster_leak_rate.value);
  CHECK(a.leaked_instances == b.leaked_instances);
  CHECK(a.pii_hits == b.pii_hits);
  CHECK(a.coherence.value == doctest::Approx(b.coherence.value).epsilon(1e-12));
}

TEST_CASE("any leaked instance implies a leaking cluster") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    GenConfig gcfg;
    gcfg.n = 80;
    gcfg.topics = 4;
    gcfg.seed = seed;
    const auto corpus = generate_corpus(gcfg);
    RunConfig rcfg;
    rcfg.k = 4;
    rcfg.min_df = 1;
    const auto run = run_pipeline(corpus, rcfg);
    if (run.report.leaked_instances > 0) CHECK(run.report.clusters_leaking >= 1);
    CHECK(run.report.leaked_instances <= run.report.total_canary_instances);
    CHECK(run.report.clusters_leaking <= run.report.clusters_with_canaries);
    CHECK(run.report.clusters_with_canaries <= run.report.published_clusters);
  }
}

TEST_CASE("small-corpus metrics equal a brute-force recomputation") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    GenConfig gcfg;
    gcfg.n = 12 + static_cast<std::int64_t>(seed % 9);  // <= 20
    gcfg.topics = 3;
    gcfg.canary_rate = 0.7;
    gcfg.pii_rate = 0.4;
    gcfg.seed = seed;
    const auto corpus = generate_corpus(gcfg);

    RunConfig rcfg;
    rcfg.k = 1 + static_cast<std::int32_t>(seed % 4);  // <= 4
    rcfg.min_df = 1;
    rcfg.k_min = (seed % 2 == 0) ? 0 : 3;
    rcfg.redact = seed % 3 == 0;
    const auto run = run_pipeline(corpus, rcfg);

    // brute force, straight from definitions
    std::int64_t total = 0, leaked = 0, with_canary = 0, leaking = 0;
    std::int64_t pub = 0;
    PiiCounts pii;
    for (const auto& s : run.summaries) {
      if (!s.published) continue;
      ++pub;
      bool any_canary = false, any_leak = false;
      for (std::size_t i = 0; i < corpus.size(); ++i) {
        if (run.clustering.assignments[i] != s.cluster_id) continue;
        for (const auto& canary : corpus[i].planted_canaries) {
          ++total;
          any_canary = true;
          if (naive_contains(s.text, canary.value)) {
            ++leaked;
            any_leak = true;
          }
        }
      }
      if (any_canary) {
        ++with_canary;
        if (any_leak) ++leaking;
      }
      pii.email += std::distance(
          std::sregex_iterator(s.text.begin(), s.text.end(), email_regex()),
          std::sregex_iterator());
      pii.phone += std::distance(
          std::sregex_iterator(s.text.begin(), s.text.end(), phone_regex()),
          std::sregex_iterator());
      pii.zip += std::distance(
          std::sregex_iterator(s.text.begin(), s.text.end(), zip_regex()),
          std::sregex_iterator());
    }

    CHECK(run.report.published_clusters == pub);
    CHECK(run.report.total_canary_instances == total);
    CHECK(run.report.leaked_instances == leaked);
    CHECK(run.report.clusters_with_canaries == with_canary);
    CHECK(run.report.clusters_leaking == leaking);
    CHECK(run.report.pii_hits == pii);
    if (total > 0)
      CHECK(run.report.per_canary_leak_rate.value ==
            static_cast<double>(leaked) / static_cast<double>(total));
    if (with_canary > 0)
      CHECK(run.report.cluster_leak_rate.value ==
            static_cast<double>(leaking) / static_cast<double>(with_canary));
  }
}
