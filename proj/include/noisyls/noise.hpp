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

#ifndef NOISYLS_NOISE_HPP_
#define NOISYLS_NOISE_HPP_

#include <atomic>
#include <cstdint>
#include <map>
#include <mutex>

#include "noisyls/objective.hpp"
#include "noisyls/subset.hpp"

namespace noisyls {

/// Multiplicative noise distributions with mean 1 (except an explicitly
/// unnormalized two-point variant) and nonnegative support.
class NoiseDistribution {
 public:
  enum class Family {
    kNoNoise,
    kExponential,
    kUniformBand,
    kTruncatedGaussian,
    kTwoPoint,
  };

  static NoiseDistribution no_noise();
  // Rate-1 exponential; already mean 1.
  static NoiseDistribution exponential();
  // Uniform on [1 - halfwidth, 1 + halfwidth], halfwidth in (0, 1).
  static NoiseDistribution uniform_band(double halfwidth);
  // Normal(1, sigma) truncated to [0, inf) and rescaled back to mean 1.
  static NoiseDistribution truncated_gaussian(double sigma);
  // Returns `high` with probability `p_high`, a low value otherwise. When
  // normalize_mean is set, the low value is (1 - high*p)/(1 - p) so the mean
  // is 1; otherwise the low value is exactly 1.
  static NoiseDistribution two_point(double high, double p_high,
                                     bool normalize_mean = true);

  Family family() const { return family_; }
  double mean() const;
  double low_value() const { return low_; }    // two-point only
  double high_value() const { return high_; }  // two-point only

  /// Inverse CDF; u must lie strictly inside (0, 1).
  double quantile(double u) const;

  /// Least t with E[exp(|xi - 1|/t)] <= 2, by bisection to relative
  /// tolerance 1e-6. NoNoise returns 0.
  double sub_exponential_norm() const;

  /// E[exp(|xi - 1|/t)], exact where a closed form exists, quadrature for
  /// the truncated Gaussian. Returns +inf when the expectation diverges.
  double abs_deviation_mgf(double t) const;

 private:
  NoiseDistribution() = default;

  Family family_ = Family::kNoNoise;
  double halfwidth_ = 0.0;
  double sigma_ = 0.0;
  double trunc_mean_ = 1.0;  // mean of the unscaled truncated Gaussian
  double high_ = 1.0;
  double low_ = 1.0;
  double p_high_ = 0.0;
};

/// Consistent noisy value oracle: f~(S) = xi_S * f(S), where xi_S is a fixed
/// function of (seed, canonical encoding of S). Every call increments the
/// query counter; optional per-set tracking is test-visible.
class NoisyOracle {
 public:
  NoisyOracle(const Objective& objective, NoiseDistribution dist,
              std::uint64_t seed);

  double noisy_value(const Subset& s);
  /// The multiplier xi_S alone; does not touch the counter.
  double multiplier(const Subset& s) const;

  const Objective& objective() const { return *objective_; }
  const NoiseDistribution& distribution() const { return dist_; }
  std::uint64_t seed() const { return seed_; }

  long long query_count() const { return count_.load(); }

  void enable_tracking();
  std::map<Subset, long long> tracked_counts() const;

 private:
  const Objective* objective_;
  NoiseDistribution dist_;
  std::uint64_t seed_;
  std::atomic<long long> count_{0};

  bool tracking_ = false;
  mutable std::mutex track_mu_;
  std::map<Subset, long long> per_set_;
};

/// Maps a 64-bit hash to the open unit interval, excluding both endpoints.
double hash_to_unit(std::uint64_t key);

}  // namespace noisyls

#endif  // NOISYLS_NOISE_HPP_
