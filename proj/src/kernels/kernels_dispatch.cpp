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

#include "leakaudit/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace leakaudit::kernels {

namespace detail {
const Ops* avx2_table();
const Ops* neon_table();
}  // namespace detail

const Ops* avx2_ops() {
#if defined(__x86_64__) || defined(__i386__)
  if (const Ops* t = detail::avx2_table(); t && __builtin_cpu_supports("avx2"))
    return t;
#endif
  return nullptr;
}

const Ops* neon_ops() { return detail::neon_table(); }

std::vector<const Ops*> available_ops() {
  std::vector<const Ops*> out{&scalar_ops()};
  if (const Ops* t = avx2_ops()) out.push_back(t);
  if (const Ops* t = neon_ops()) out.push_back(t);
  return out;
}

namespace {

const Ops& resolve() {
  if (const char* want = std::getenv("LEAKAUDIT_KERNELS")) {
    if (std::strcmp(want, "avx2") == 0) {
      if (const Ops* t = avx2_ops()) return *t;
      return scalar_ops();
    }
    if (std::strcmp(want, "neon") == 0) {
      if (const Ops* t = neon_ops()) return *t;
      return scalar_ops();
    }
    return scalar_ops();
  }
  if (const Ops* t = avx2_ops()) return *t;
  if (const Ops* t = neon_ops()) return *t;
  return scalar_ops();
}

}  // namespace

const Ops& active_ops() {
  static const Ops& picked = resolve();
  return picked;
}

}  // namespace leakaudit::kernels
