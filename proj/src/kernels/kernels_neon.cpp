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

// NEON kernels (aarch64). float64x2_t carries two lanes, so a pair of
// registers emulates the four-lane layout of the scalar reference: register
// p holds lanes {0,1}, register q lanes {2,3}. vmulq+vaddq, no fused ops,
// matching the scalar rounding exactly.

#include "leakaudit/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace leakaudit::kernels {
namespace {

double dot_neon(const double* a, const double* b, std::size_t n) {
  float64x2_t p = vdupq_n_f64(0.0);
  float64x2_t q = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    p = vaddq_f64(p, vmulq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
    q = vaddq_f64(q, vmulq_f64(vld1q_f64(a + i + 2), vld1q_f64(b + i + 2)));
  }
  double lane[4] = {vgetq_lane_f64(p, 0), vgetq_lane_f64(p, 1),
                    vgetq_lane_f64(q, 0), vgetq_lane_f64(q, 1)};
  for (; i < n; ++i) lane[i % 4] += a[i] * b[i];
  return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

double sparse_dot_neon(const std::int32_t* idx, const double* val,
                       std::size_t nnz, const double* dense) {
  // No gather on NEON; the lane bookkeeping alone keeps parity.
  double lane[4] = {0.0, 0.0, 0.0, 0.0};
  std::size_t j = 0;
  for (; j + 4 <= nnz; j += 4) {
    lane[0] += val[j] * dense[idx[j]];
    lane[1] += val[j + 1] * dense[idx[j + 1]];
    lane[2] += val[j + 2] * dense[idx[j + 2]];
    lane[3] += val[j + 3] * dense[idx[j + 3]];
  }
  for (; j < nnz; ++j) lane[j % 4] += val[j] * dense[idx[j]];
  return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

void axpy_neon(double* y, double a, const double* x, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t vy = vld1q_f64(y + i);
    vy = vaddq_f64(vy, vmulq_f64(va, vld1q_f64(x + i)));
    vst1q_f64(y + i, vy);
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

void scale_neon(double* x, double a, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2)
    vst1q_f64(x + i, vmulq_f64(vld1q_f64(x + i), va));
  for (; i < n; ++i) x[i] *= a;
}

}  // namespace

namespace detail {
const Ops* neon_table() {
  static const Ops ops{"neon", dot_neon, sparse_dot_neon, axpy_neon,
                       scale_neon};
  return &ops;
}
}  // namespace detail

}  // namespace leakaudit::kernels

#else  // !defined(__aarch64__)

namespace leakaudit::kernels::detail {
const Ops* neon_table() { return nullptr; }
}  // namespace leakaudit::kernels::detail

#endif
