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

#ifndef LEAKAUDIT_KERNELS_HPP
#define LEAKAUDIT_KERNELS_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace leakaudit::kernels {

// Vector kernels behind the TF-IDF / k-means / coherence inner loops.
//
// Every backend implements the same fixed arithmetic: reductions accumulate
// element i into lane (i mod 4) and combine lanes as (l0 + l1) + (l2 + l3).
// Kernel translation units are built with FP contraction disabled, so the
// scalar, AVX2 and NEON backends return bit-identical doubles and the whole
// pipeline is invariant under backend selection. The equivalence tests
// assert exactly that.
struct Ops {
  const char* name;

  // sum_i a[i] * b[i]
  double (*dot)(const double* a, const double* b, std::size_t n);

  // sum_j val[j] * dense[idx[j]]; idx entries must be in range, may repeat
  double (*sparse_dot)(const std::int32_t* idx, const double* val,
                       std::size_t nnz, const double* dense);

  // y[i] += a * x[i]
  void (*axpy)(double* y, double a, const double* x, std::size_t n);

  // x[i] *= a
  void (*scale)(double* x, double a, std::size_t n);
};

const Ops& scalar_ops();

// Null when the unit is not compiled in or the CPU lacks the feature.
const Ops* avx2_ops();
const Ops* neon_ops();

// Backends usable on this machine, scalar first.
std::vector<const Ops*> available_ops();

// Backend used by the pipeline: the widest available unit, unless the
// LEAKAUDIT_KERNELS environment variable (scalar|avx2|neon) forces one.
// An unavailable forced choice falls back to scalar. Resolved once.
const Ops& active_ops();

}  // namespace leakaudit::kernels

#endif  // LEAKAUDIT_KERNELS_HPP
