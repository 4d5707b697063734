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

// Scalar reference kernels. These define the arithmetic contract: four
// accumulator lanes, element i in lane (i mod 4), lanes combined as
// (l0 + l1) + (l2 + l3). The SIMD backends replay the identical operation
// order, which is what makes cross-backend results bit-identical.

#include "leakaudit/kernels.hpp"

namespace leakaudit::kernels {
namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double l0 = 0.0, l1 = 0.0, l2 = 0.0, l3 = 0.0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    l0 += a[i] * b[i];
    l1 += a[i + 1] * b[i + 1];
    l2 += a[i + 2] * b[i + 2];
    l3 += a[i + 3] * b[i + 3];
  }
  double lane[4] = {l0, l1, l2, l3};
  for (; i < n; ++i) lane[i % 4] += a[i] * b[i];
  return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

double sparse_dot_scalar(const std::int32_t* idx, const double* val,
                         std::size_t nnz, const double* dense) {
  double l0 = 0.0, l1 = 0.0, l2 = 0.0, l3 = 0.0;
  std::size_t j = 0;
  for (; j + 4 <= nnz; j += 4) {
    l0 += val[j] * dense[idx[j]];
    l1 += val[j + 1] * dense[idx[j + 1]];
    l2 += val[j + 2] * dense[idx[j + 2]];
    l3 += val[j + 3] * dense[idx[j + 3]];
  }
  double lane[4] = {l0, l1, l2, l3};
  for (; j < nnz; ++j) lane[j % 4] += val[j] * dense[idx[j]];
  return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

void axpy_scalar(double* y, double a, const double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scale_scalar(double* x, double a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops ops{"scalar", dot_scalar, sparse_dot_scalar, axpy_scalar,
                       scale_scalar};
  return ops;
}

}  // namespace leakaudit::kernels
