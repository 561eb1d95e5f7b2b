// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NOISYLS_RNG_HPP_
#define NOISYLS_RNG_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "noisyls/subset.hpp"

namespace noisyls {

/// Deterministic cross-platform generator (SplitMix64 sequence) for the
/// algorithm-side randomness. Streams derived from (seed, stream) never
/// collide with the noise PRF, which keys sets directly.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream)
      : state_(mix64(seed ^ 0x6e6f697379726e67ULL) ^ mix64(stream)) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in the open interval (0, 1).
  double next_unit() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Uniform in {0, ..., n-1}, rejection-sampled so it is exactly uniform.
  int uniform_int(int n) {
    if (n < 1) throw std::invalid_argument("uniform_int: n < 1");
    const std::uint64_t un = static_cast<std::uint64_t>(n);
    const std::uint64_t bound = UINT64_MAX - UINT64_MAX % un;
    std::uint64_t draw;
    do {
      draw = next_u64();
    } while (draw >= bound);
    return static_cast<int>(draw % un);
  }

  /// Index sampled with probability proportional to exp(log_weights[i]).
  int sample_discrete_log(const std::vector<double>& log_weights) {
    if (log_weights.empty()) {
      throw std::invalid_argument("sample_discrete_log: empty weights");
    }
    double max_log = log_weights.front();
    for (double w : log_weights) max_log = std::max(max_log, w);
    std::vector<double> cumulative(log_weights.size());
    double total = 0.0;
    for (std::size_t i = 0; i < log_weights.size(); ++i) {
      total += std::exp(log_weights[i] - max_log);
      cumulative[i] = total;
    }
    const double u = next_unit() * total;
    for (std::size_t i = 0; i + 1 < cumulative.size(); ++i) {
      if (u <= cumulative[i]) return static_cast<int>(i);
    }
    return static_cast<int>(cumulative.size()) - 1;
  }

  /// Uniform k-subset of ids (partial Fisher-Yates, canonical output).
  Subset uniform_subset(const std::vector<int>& ids, int k) {
    if (k < 0 || k > static_cast<int>(ids.size())) {
      throw std::invalid_argument("uniform_subset: bad k");
    }
    std::vector<int> pool = ids;
    for (int i = 0; i < k; ++i) {
      const int j = i + uniform_int(static_cast<int>(pool.size()) - i);
      std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    return Subset(pool);
  }

 private:
  std::uint64_t state_;
};

}  // namespace noisyls

#endif  // NOISYLS_RNG_HPP_
