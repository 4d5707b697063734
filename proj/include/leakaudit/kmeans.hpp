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

#ifndef LEAKAUDIT_KMEANS_HPP
#define LEAKAUDIT_KMEANS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "leakaudit/tfidf.hpp"

namespace leakaudit {

struct ClusteringResult {
  std::vector<std::int32_t> assignments;  // one cluster id per row of X
  std::vector<double> centroids;          // k x dim, row-major
  std::int32_t k = 0;
  std::size_t dim = 0;
  int iterations_run = 0;
  std::vector<double> objective_history;  // within-cluster sum of squares

  std::span<const double> centroid(std::int32_t cluster) const {
    return {centroids.data() + static_cast<std::size_t>(cluster) * dim, dim};
  }
};

// Lloyd iterations over squared Euclidean distance with k-means++ seeding.
// Empty clusters are reseeded to the farthest point during iteration and any
// still-empty clusters are dropped (ids compacted) at the end. Deterministic
// for a given (X, k, seed).
// Throws std::invalid_argument when k < 1, k > rows, or X is empty.
ClusteringResult kmeans_fit(const CsrMatrix& X, std::int32_t k,
                            std::uint64_t seed, int max_iter = 100,
                            double tol = 1e-4);

// Cluster-count heuristic: max(2, ceil(n / 56)). Callers clamp to n.
std::int32_t default_k(std::int64_t n);

// Row indices assigned to `cluster`, ascending.
// Throws std::out_of_range on an unknown cluster id.
std::vector<std::int64_t> cluster_members(const ClusteringResult& result,
                                          std::int32_t cluster);

}  // namespace leakaudit

#endif  // LEAKAUDIT_KMEANS_HPP
