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

// AVX2 kernels. One __m256d register holds the four accumulator lanes of the
// scalar reference; tails fold into lane (i mod 4) so results stay
// bit-identical. Plain mul+add on purpose: FMA would change rounding
// relative to the scalar backend.

#include "leakaudit/kernels.hpp"

#if defined(__AVX2__)

#include <immintrin.h>

namespace leakaudit::kernels {
namespace {

inline double reduce_lanes(__m256d acc, const double* tail_a,
                           const double* tail_b, std::size_t done,
                           std::size_t n) {
  alignas(32) double lane[4];
  _mm256_store_pd(lane, acc);
  for (std::size_t i = done; i < n; ++i)
    lane[i % 4] += tail_a[i] * tail_b[i];
  return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d va = _mm256_loadu_pd(a + i);
    __m256d vb = _mm256_loadu_pd(b + i);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(va, vb));
  }
  return reduce_lanes(acc, a, b, i, n);
}

double sparse_dot_avx2(const std::int32_t* idx, const double* val,
                       std::size_t nnz, const double* dense) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t j = 0;
  for (; j + 4 <= nnz; j += 4) {
    __m128i vi = _mm_loadu_si128(reinterpret_cast<const __m128i*>(idx + j));
    __m256d vg = _mm256_i32gather_pd(dense, vi, 8);
    __m256d vv = _mm256_loadu_pd(val + j);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(vv, vg));
  }
  alignas(32) double lane[4];
  _mm256_store_pd(lane, acc);
  for (; j < nnz; ++j) lane[j % 4] += val[j] * dense[idx[j]];
  return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

void axpy_avx2(double* y, double a, const double* x, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d vy = _mm256_loadu_pd(y + i);
    __m256d vx = _mm256_loadu_pd(x + i);
    _mm256_storeu_pd(y + i, _mm256_add_pd(vy, _mm256_mul_pd(va, vx)));
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

void scale_avx2(double* x, double a, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(x + i, _mm256_mul_pd(_mm256_loadu_pd(x + i), va));
  for (; i < n; ++i) x[i] *= a;
}

}  // namespace

namespace detail {
const Ops* avx2_table() {
  static const Ops ops{"avx2", dot_avx2, sparse_dot_avx2, axpy_avx2,
                       scale_avx2};
  return &ops;
}
}  // namespace detail

}  // namespace leakaudit::kernels

#else  // !defined(__AVX2__)

namespace leakaudit::kernels::detail {
const Ops* avx2_table() { return nullptr; }
}  // namespace leakaudit::kernels::detail

#endif
