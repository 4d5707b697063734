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

#include "leakaudit/evaluate.hpp"

#include <cmath>
#include <regex>
#include <stdexcept>

#include "leakaudit/kernels.hpp"

namespace leakaudit {
namespace {

std::int64_t count_matches(const std::string& text, const std::regex& re) {
  return std::distance(std::sregex_iterator(text.begin(), text.end(), re),
                       std::sregex_iterator());
}

}  // namespace

std::pair<std::int64_t, std::int64_t> exact_canary_leaks(
    std::string_view summary, std::span<const CanaryRecord> canaries) {
  std::int64_t leaked = 0;
  for (const auto& c : canaries)
    if (summary.find(c.value) != std::string_view::npos) ++leaked;
  return {leaked, static_cast<std::int64_t>(canaries.size())};
}

std::vector<ClusterView> published_view(
    const std::vector<Conversation>& corpus, const ClusteringResult& result,
    const std::vector<ClusterSummary>& summaries) {
  std::vector<ClusterView> views;
  for (const auto& s : summaries) {
    if (!s.published) continue;
    ClusterView v;
    v.summary = &s;
    for (std::size_t i = 0; i < result.assignments.size(); ++i)
      if (result.assignments[i] == s.cluster_id)
        v.members.push_back(&corpus[i]);
    views.push_back(std::move(v));
  }
  return views;
}

CanaryLeakStats per_canary_leak_rate(std::span<const ClusterView> published) {
  CanaryLeakStats stats;
  for (const auto& view : published) {
    for (const Conversation* conv : view.members) {
      const auto [leaked, total] =
          exact_canary_leaks(view.summary->text, conv->planted_canaries);
      stats.leaked += leaked;
      stats.total += total;
    }
  }
  stats.rate.defined = stats.total > 0;
  stats.rate.value = stats.rate.defined
                         ? static_cast<double>(stats.leaked) /
                               static_cast<double>(stats.total)
                         : 0.0;
  return stats;
}

ClusterLeakStats cluster_leak_rate(std::span<const ClusterView> published) {
  ClusterLeakStats stats;
  for (const auto& view : published) {
    bool has_canary = false;
    bool leaks = false;
    for (const Conversation* conv : view.members) {
      if (conv->planted_canaries.empty()) continue;
      has_canary = true;
      const auto [leaked, total] =
          exact_canary_leaks(view.summary->text, conv->planted_canaries);
      (void)total;
      if (leaked > 0) {
        leaks = true;
        break;
      }
    }
    if (has_canary) {
      ++stats.with_canaries;
      if (leaks) ++stats.leaking;
    }
  }
  stats.rate.defined = stats.with_canaries > 0;
  stats.rate.value = stats.rate.defined
                         ? static_cast<double>(stats.leaking) /
                               static_cast<double>(stats.with_canaries)
                         : 0.0;
  return stats;
}

PiiCounts pii_indicator_counts(std::span<const ClusterView> published) {
  PiiCounts counts;
  for (const auto& view : published) {
    counts.email += count_matches(view.summary->text, email_regex());
    counts.phone += count_matches(view.summary->text, phone_regex());
    counts.zip += count_matches(view.summary->text, zip_regex());
  }
  return counts;
}

double coherence(const ClusteringResult& result, const CsrMatrix& X,
                 std::span<const std::int32_t> cluster_ids) {
  if (cluster_ids.empty())
    throw std::invalid_argument("coherence: no published clusters");
  const auto& ops = kernels::active_ops();

  double sum = 0.0;
  for (const std::int32_t c : cluster_ids) {
    const auto centroid = result.centroid(c);
    const double cnorm = std::sqrt(
        ops.dot(centroid.data(), centroid.data(), centroid.size()));
    double cluster_sum = 0.0;
    std::int64_t count = 0;
    for (std::size_t i = 0; i < result.assignments.size(); ++i) {
      if (result.assignments[i] != c) continue;
      ++count;
      const auto cols = X.row_cols(i);
      const auto vals = X.row_vals(i);
      const double xnorm =
          std::sqrt(ops.dot(vals.data(), vals.data(), vals.size()));
      if (xnorm == 0.0 || cnorm == 0.0) continue;  // empty row: cosine 0
      const double dot = ops.sparse_dot(cols.data(), vals.data(), cols.size(),
                                        centroid.data());
      cluster_sum += dot / (xnorm * cnorm);
    }
    if (count > 0) sum += cluster_sum / static_cast<double>(count);
  }
  return sum / static_cast<double>(cluster_ids.size());
}

LeakageReport assemble_report(const std::vector<Conversation>& corpus,
                              const ClusteringResult& result,
                              const std::vector<ClusterSummary>& summaries,
                              const CsrMatrix& X) {
  LeakageReport report;
  const auto views = published_view(corpus, result, summaries);
  report.published_clusters = static_cast<std::int64_t>(views.size());

  const auto canary_stats = per_canary_leak_rate(views);
  report.total_canary_instances = canary_stats.total;
  report.leaked_instances = canary_stats.leaked;
  report.per_canary_leak_rate = canary_stats.rate;

  const auto cluster_stats = cluster_leak_rate(views);
  report.clusters_with_canaries = cluster_stats.with_canaries;
  report.clusters_leaking = cluster_stats.leaking;
  report.cluster_leak_rate = cluster_stats.rate;

  report.pii_hits = pii_indicator_counts(views);

  std::vector<std::int32_t> published_ids;
  for (const auto& v : views) published_ids.push_back(v.summary->cluster_id);
  if (!published_ids.empty()) {
    report.coherence.value = coherence(result, X, published_ids);
    report.coherence.defined = true;
  }
  return report;
}

}  // namespace leakaudit
