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

#include "leakaudit/kmeans.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "leakaudit/kernels.hpp"
#include "leakaudit/rng.hpp"

namespace leakaudit {
namespace {

void scatter_row(const CsrMatrix& X, std::size_t row, double* dense) {
  const auto cols = X.row_cols(row);
  const auto vals = X.row_vals(row);
  for (std::size_t j = 0; j < cols.size(); ++j)
    dense[cols[j]] += vals[j];
}

double row_sq_norm(const CsrMatrix& X, std::size_t row) {
  const auto vals = X.row_vals(row);
  return kernels::active_ops().dot(vals.data(), vals.data(), vals.size());
}

}  // namespace

std::int32_t default_k(std::int64_t n) {
  const std::int64_t k = (n + 55) / 56;
  return static_cast<std::int32_t>(std::max<std::int64_t>(2, k));
}

ClusteringResult kmeans_fit(const CsrMatrix& X, std::int32_t k,
                            std::uint64_t seed, int max_iter, double tol) {
  const std::size_t n = X.rows;
  const std::size_t dim = X.cols;
  if (n == 0) throw std::invalid_argument("kmeans: empty matrix");
  if (k < 1) throw std::invalid_argument("kmeans: k must be >= 1");
  if (static_cast<std::size_t>(k) > n)
    throw std::invalid_argument("kmeans: k exceeds number of points");

  const auto& ops = kernels::active_ops();
  Rng rng(seed);

  std::vector<double> xsq(n);
  for (std::size_t i = 0; i < n; ++i) xsq[i] = row_sq_norm(X, i);

  // k-means++ seeding: first centroid uniform, then proportional to the
  // squared distance to the nearest chosen centroid.
  std::vector<double> centroids(static_cast<std::size_t>(k) * dim, 0.0);
  std::vector<double> best_dist(n, std::numeric_limits<double>::infinity());
  std::vector<double> seed_dense(dim, 0.0);
  {
    const std::size_t first = rng.below(n);
    scatter_row(X, first, centroids.data());
    for (std::size_t i = 0; i < n; ++i) {
      const auto cols = X.row_cols(i);
      const auto vals = X.row_vals(i);
      const double dot =
          ops.sparse_dot(cols.data(), vals.data(), cols.size(),
                         centroids.data());
      best_dist[i] = std::max(0.0, xsq[i] - 2.0 * dot + xsq[first]);
    }
    for (std::int32_t c = 1; c < k; ++c) {
      double total = 0.0;
      for (std::size_t i = 0; i < n; ++i) total += best_dist[i];
      std::size_t chosen;
      if (total > 0.0) {
        const double r = rng.real01() * total;
        double acc = 0.0;
        chosen = n - 1;
        for (std::size_t i = 0; i < n; ++i) {
          acc += best_dist[i];
          if (r < acc) {
            chosen = i;
            break;
          }
        }
      } else {
        chosen = rng.below(n);
      }
      double* dst = centroids.data() + static_cast<std::size_t>(c) * dim;
      std::fill(seed_dense.begin(), seed_dense.end(), 0.0);
      scatter_row(X, chosen, seed_dense.data());
      std::copy(seed_dense.begin(), seed_dense.end(), dst);
      for (std::size_t i = 0; i < n; ++i) {
        const auto cols = X.row_cols(i);
        const auto vals = X.row_vals(i);
        const double dot =
            ops.sparse_dot(cols.data(), vals.data(), cols.size(), dst);
        const double d = std::max(0.0, xsq[i] - 2.0 * dot + xsq[chosen]);
        if (d < best_dist[i]) best_dist[i] = d;
      }
    }
  }

  ClusteringResult result;
  result.k = k;
  result.dim = dim;
  result.assignments.assign(n, 0);

  // Centroids transposed (dim x k) so the assignment inner loop is a dense
  // axpy of length k per nonzero.
  std::vector<double> centroids_t(dim * static_cast<std::size_t>(k));
  std::vector<double> csq(k);
  std::vector<double> dots(k);
  std::vector<double> point_dist(n);
  std::vector<std::int64_t> counts(k);
  double prev_objective = std::numeric_limits<double>::infinity();

  for (int iter = 0; iter < max_iter; ++iter) {
    for (std::size_t d = 0; d < dim; ++d)
      for (std::int32_t c = 0; c < k; ++c)
        centroids_t[d * static_cast<std::size_t>(k) + c] =
            centroids[static_cast<std::size_t>(c) * dim + d];
    for (std::int32_t c = 0; c < k; ++c) {
      const double* cd = centroids.data() + static_cast<std::size_t>(c) * dim;
      csq[c] = ops.dot(cd, cd, dim);
    }

    double objective = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      std::fill(dots.begin(), dots.end(), 0.0);
      const auto cols = X.row_cols(i);
      const auto vals = X.row_vals(i);
      for (std::size_t j = 0; j < cols.size(); ++j)
        ops.axpy(dots.data(), vals[j],
                 centroids_t.data() +
                     static_cast<std::size_t>(cols[j]) * k,
                 static_cast<std::size_t>(k));
      std::int32_t best = 0;
      double best_d = std::numeric_limits<double>::infinity();
      for (std::int32_t c = 0; c < k; ++c) {
        const double d = xsq[i] - 2.0 * dots[c] + csq[c];
        if (d < best_d) {
          best_d = d;
          best = c;
        }
      }
      result.assignments[i] = best;
      point_dist[i] = best_d;
      objective += std::max(0.0, best_d);
    }
    result.objective_history.push_back(objective);
    result.iterations_run = iter + 1;

    // Centroid update: mean of member rows, accumulated in row order.
    std::fill(centroids.begin(), centroids.end(), 0.0);
    std::fill(counts.begin(), counts.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      const std::int32_t c = result.assignments[i];
      scatter_row(X, i, centroids.data() + static_cast<std::size_t>(c) * dim);
      ++counts[c];
    }

    bool reseeded = false;
    std::vector<bool> taken(n, false);
    for (std::int32_t c = 0; c < k; ++c) {
      double* cd = centroids.data() + static_cast<std::size_t>(c) * dim;
      if (counts[c] > 0) {
        ops.scale(cd, 1.0 / static_cast<double>(counts[c]), dim);
        continue;
      }
      // Reseed an empty cluster to the farthest unclaimed point.
      std::size_t far = 0;
      double far_d = -1.0;
      for (std::size_t i = 0; i < n; ++i)
        if (!taken[i] && point_dist[i] > far_d) {
          far_d = point_dist[i];
          far = i;
        }
      taken[far] = true;
      std::fill(cd, cd + dim, 0.0);
      scatter_row(X, far, cd);
      reseeded = true;
    }

    if (!reseeded) {
      const double rel =
          std::abs(prev_objective - objective) /
          std::max(objective, std::numeric_limits<double>::min());
      if (rel <= tol) break;
    }
    prev_objective = objective;
  }

  // Drop empty clusters and compact ids.
  std::fill(counts.begin(), counts.end(), 0);
  for (std::size_t i = 0; i < n; ++i) ++counts[result.assignments[i]];
  std::vector<std::int32_t> remap(k, -1);
  std::int32_t next = 0;
  for (std::int32_t c = 0; c < k; ++c)
    if (counts[c] > 0) remap[c] = next++;
  if (next != k) {
    std::vector<double> compacted(static_cast<std::size_t>(next) * dim);
    for (std::int32_t c = 0; c < k; ++c)
      if (remap[c] >= 0)
        std::copy_n(centroids.data() + static_cast<std::size_t>(c) * dim, dim,
                    compacted.data() +
                        static_cast<std::size_t>(remap[c]) * dim);
    centroids = std::move(compacted);
    for (auto& a : result.assignments) a = remap[a];
  }
  result.k = next;
  result.centroids = std::move(centroids);
  return result;
}

std::vector<std::int64_t> cluster_members(const ClusteringResult& result,
                                          std::int32_t cluster) {
  if (cluster < 0 || cluster >= result.k)
    throw std::out_of_range("unknown cluster id " + std::to_string(cluster));
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < result.assignments.size(); ++i)
    if (result.assignments[i] == cluster)
      out.push_back(static_cast<std::int64_t>(i));
  return out;
}

}  // namespace leakaudit
