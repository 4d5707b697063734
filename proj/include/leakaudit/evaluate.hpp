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

#ifndef LEAKAUDIT_EVALUATE_HPP
#define LEAKAUDIT_EVALUATE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "leakaudit/corpus.hpp"
#include "leakaudit/defenses.hpp"
#include "leakaudit/kmeans.hpp"
#include "leakaudit/summarize.hpp"
#include "leakaudit/tfidf.hpp"

namespace leakaudit {

// A ratio whose denominator may be empty. `defined == false` means "no
// instances"; the value is then 0 by convention so sweeps never fail.
struct RateStat {
  double value = 0.0;
  bool defined = false;
};

struct PiiCounts {
  std::int64_t email = 0;
  std::int64_t phone = 0;
  std::int64_t zip = 0;
  friend bool operator==(const PiiCounts&, const PiiCounts&) = default;
};

struct LeakageReport {
  std::int64_t published_clusters = 0;
  std::int64_t total_canary_instances = 0;  // over published clusters
  std::int64_t leaked_instances = 0;
  RateStat per_canary_leak_rate;
  std::int64_t clusters_with_canaries = 0;  // among published clusters
  std::int64_t clusters_leaking = 0;
  RateStat cluster_leak_rate;
  PiiCounts pii_hits;  // counted on the final published text
  RateStat coherence;
};

// One published cluster with its member conversations.
struct ClusterView {
  const ClusterSummary* summary = nullptr;
  std::vector<const Conversation*> members;
};

// (leaked, total): canaries whose value appears verbatim in `summary`.
std::pair<std::int64_t, std::int64_t> exact_canary_leaks(
    std::string_view summary, std::span<const CanaryRecord> canaries);

// Published clusters only, ordered by cluster id.
std::vector<ClusterView> published_view(
    const std::vector<Conversation>& corpus, const ClusteringResult& result,
    const std::vector<ClusterSummary>& summaries);

struct CanaryLeakStats {
  std::int64_t leaked = 0;
  std::int64_t total = 0;
  RateStat rate;
};

// Fraction of (conversation, canary) instances in published clusters whose
// canary appears verbatim in the conversation's own cluster summary.
CanaryLeakStats per_canary_leak_rate(std::span<const ClusterView> published);

struct ClusterLeakStats {
  std::int64_t with_canaries = 0;
  std::int64_t leaking = 0;
  RateStat rate;
};

// Fraction of canary-containing published clusters leaking at least one
// member canary.
ClusterLeakStats cluster_leak_rate(std::span<const ClusterView> published);

// Total regex matches per category over the published summary texts.
PiiCounts pii_indicator_counts(std::span<const ClusterView> published);

// Mean cosine of member rows to their centroid, averaged (unweighted) over
// the given clusters. Throws std::invalid_argument when the list is empty.
double coherence(const ClusteringResult& result, const CsrMatrix& X,
                 std::span<const std::int32_t> cluster_ids);

// All metrics over the published subset of `summaries`.
LeakageReport assemble_report(const std::vector<Conversation>& corpus,
                              const ClusteringResult& result,
                              const std::vector<ClusterSummary>& summaries,
                              const CsrMatrix& X);

}  // namespace leakaudit

#endif  // LEAKAUDIT_EVALUATE_HPP
