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

#ifndef LEAKAUDIT_RNG_HPP
#define LEAKAUDIT_RNG_HPP

#include <cstdint>
#include <random>

namespace leakaudit {

// Seeded random stream. mt19937_64 has a standard-mandated sequence; the
// draws below avoid std::*_distribution, whose outputs are
// implementation-defined, so identical seeds give byte-identical corpora on
// every toolchain.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound) { return next_u64() % bound; }

  // Uniform in [0, 1), 53-bit resolution.
  double real01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  bool bernoulli(double p) { return real01() < p; }

  template <typename Seq>
  const auto& pick(const Seq& seq) {
    return seq[below(seq.size())];
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace leakaudit

#endif  // LEAKAUDIT_RNG_HPP
