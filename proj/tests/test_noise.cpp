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

#include <cmath>
#include <vector>

#include "doctest.h"
#include "noisyls/noise.hpp"
#include "noisyls/rng.hpp"

using noisyls::NoiseDistribution;
using noisyls::NoisyOracle;
using noisyls::Objective;
using noisyls::Subset;

namespace {

double draw(const NoiseDistribution& dist, const Subset& s,
            std::uint64_t seed) {
  return dist.quantile(noisyls::hash_to_unit(s.stable_key(seed)));
}

// Simpson's rule, used as the independent quadrature oracle.
template <typename F>
double simpson(const F& f, double lo, double hi, int intervals) {
  const double h = (hi - lo) / intervals;
  double sum = f(lo) + f(hi);
  for (int i = 1; i < intervals; ++i) {
    sum += f(lo + i * h) * (i % 2 ? 4.0 : 2.0);
  }
  return sum * h / 3.0;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

}  // namespace

TEST_CASE("quantiles hit the textbook values") {
  CHECK(NoiseDistribution::exponential().quantile(1.0 - std::exp(-1.0)) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(NoiseDistribution::uniform_band(0.1).quantile(0.5) ==
        doctest::Approx(1.0).epsilon(1e-12));
  const double median = NoiseDistribution::truncated_gaussian(0.2).quantile(0.5);
  CHECK(median >= 0.99);
  CHECK(median <= 1.01);
  CHECK_THROWS(NoiseDistribution::uniform_band(0.1).quantile(0.0));
  CHECK_THROWS(NoiseDistribution::uniform_band(0.1).quantile(1.0));
  CHECK_THROWS(NoiseDistribution::uniform_band(1.5));
}

TEST_CASE("truncated gaussian quantile matches a numeric CDF inversion") {
  const double sigma = 0.2;
  const NoiseDistribution dist = NoiseDistribution::truncated_gaussian(sigma);
  // Mean of the [0, inf) truncation of Normal(1, sigma).
  const double trunc_mean =
      1.0 + sigma * std::exp(-0.5 / (sigma * sigma)) /
                (std::sqrt(2.0 * M_PI) * normal_cdf(1.0 / sigma));
  const auto cdf = [&](double y) {
    return (normal_cdf((y * trunc_mean - 1.0) / sigma) -
            normal_cdf(-1.0 / sigma)) /
           normal_cdf(1.0 / sigma);
  };
  for (double u : {0.01, 0.1, 0.25, 0.5, 0.75, 0.9, 0.99}) {
    double lo = 0.0, hi = (1.0 + 10.0 * sigma) / trunc_mean;
    for (int iter = 0; iter < 80; ++iter) {
      const double mid = 0.5 * (lo + hi);
      (cdf(mid) < u ? lo : hi) = mid;
    }
    CHECK(dist.quantile(u) == doctest::Approx(0.5 * (lo + hi)).epsilon(1e-6));
  }
  // The rescaled distribution has mean 1 under quadrature.
  const auto integrand = [&](double y) {
    const double x = y * trunc_mean;
    return y * trunc_mean *
           std::exp(-0.5 * (x - 1.0) * (x - 1.0) / (sigma * sigma)) /
           (std::sqrt(2.0 * M_PI) * sigma * normal_cdf(1.0 / sigma));
  };
  CHECK(simpson(integrand, 0.0, (1.0 + 12.0 * sigma) / trunc_mean, 20000) ==
        doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("noisy values are consistent and counted") {
  const Objective f = Objective::modular({2, 3, 4, 5});
  NoisyOracle none(f, NoiseDistribution::no_noise(), 7);
  CHECK(none.query_count() == 0);
  CHECK(none.noisy_value(Subset({1, 2})) == 7.0);
  CHECK(none.query_count() == 1);

  NoisyOracle band(f, NoiseDistribution::uniform_band(0.1), 7);
  for (std::uint32_t mask = 1; mask < 16; ++mask) {
    std::vector<int> ids;
    for (int i = 0; i < 4; ++i) {
      if (mask & (1u << i)) ids.push_back(i);
    }
    const Subset s(ids);
    const double value = band.noisy_value(s);
    const double exact = f.evaluate(s);
    CHECK(value >= 0.9 * exact - 1e-12);
    CHECK(value <= 1.1 * exact + 1e-12);
    CHECK(band.noisy_value(s) == value);
  }
  CHECK(band.query_count() == 2 * 15);
}

TEST_CASE("repeat queries are a pure function of the set") {
  const Objective f = Objective::modular({1, 2, 3, 4, 5, 6});
  NoisyOracle oracle(f, NoiseDistribution::exponential(), 123);
  const Subset s({0, 3, 5});
  const double first = oracle.noisy_value(s);
  for (int i = 0; i < 10000; ++i) {
    CHECK(oracle.noisy_value(s) == first);
  }
  CHECK(oracle.query_count() == 10001);
}

TEST_CASE("per-set tracking sees every distinct query") {
  const Objective f = Objective::modular({1, 1, 1});
  NoisyOracle oracle(f, NoiseDistribution::no_noise(), 1);
  oracle.enable_tracking();
  oracle.noisy_value(Subset({0}));
  oracle.noisy_value(Subset({0}));
  oracle.noisy_value(Subset({1, 2}));
  const auto counts = oracle.tracked_counts();
  CHECK(counts.at(Subset({0})) == 2);
  CHECK(counts.at(Subset({1, 2})) == 1);
}

TEST_CASE("mean-1 families calibrate empirically") {
  std::vector<NoiseDistribution> families;
  families.push_back(NoiseDistribution::exponential());
  families.push_back(NoiseDistribution::uniform_band(0.1));
  families.push_back(NoiseDistribution::truncated_gaussian(0.2));
  families.push_back(NoiseDistribution::two_point(10.0, 0.01));
  const int samples = 100000;
  for (const NoiseDistribution& dist : families) {
    CHECK(dist.mean() == doctest::Approx(1.0).epsilon(1e-12));
    double sum = 0.0, sum_sq = 0.0;
    for (int i = 0; i < samples; ++i) {
      const double xi = draw(dist, Subset({i}), 31);
      sum += xi;
      sum_sq += xi * xi;
    }
    const double mean = sum / samples;
    const double variance = sum_sq / samples - mean * mean;
    const double stderr_mean = std::sqrt(variance / samples);
    CHECK(std::abs(mean - 1.0) <= 3.0 * stderr_mean);
  }
}

TEST_CASE("disjoint sets have uncorrelated multipliers") {
  const NoiseDistribution dist = NoiseDistribution::uniform_band(0.3);
  const int samples = 10000;
  double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  for (int i = 0; i < samples; ++i) {
    const double x = draw(dist, Subset({2 * i}), 77);
    const double y = draw(dist, Subset({2 * i + 1}), 77);
    sx += x;
    sy += y;
    sxx += x * x;
    syy += y * y;
    sxy += x * y;
  }
  const double cov = sxy / samples - (sx / samples) * (sy / samples);
  const double vx = sxx / samples - (sx / samples) * (sx / samples);
  const double vy = syy / samples - (sy / samples) * (sy / samples);
  const double corr = cov / std::sqrt(vx * vy);
  CHECK(std::abs(corr) <= 3.0 / std::sqrt(static_cast<double>(samples)));
}

TEST_CASE("sub-exponential norms") {
  CHECK(NoiseDistribution::no_noise().sub_exponential_norm() == 0.0);

  const double band_kappa =
      NoiseDistribution::uniform_band(0.1).sub_exponential_norm();
  CHECK(band_kappa <= 0.1 / std::log(2.0) + 1e-9);
  CHECK(band_kappa > 0.0);

  // The bisection answer must satisfy the defining equation under an
  // independent quadrature of the exponential density.
  const double exp_kappa =
      NoiseDistribution::exponential().sub_exponential_norm();
  const auto integrand = [&](double x) {
    return std::exp(std::abs(x - 1.0) / exp_kappa) * std::exp(-x);
  };
  const double expectation = simpson(integrand, 0.0, 1.0, 2000) +
                             simpson(integrand, 1.0, 80.0, 60000);
  CHECK(expectation == doctest::Approx(2.0).epsilon(1e-4));

  // Bounded support: kappa never exceeds (b+1)/ln 2 with b the deviation cap.
  const NoiseDistribution two = NoiseDistribution::two_point(10.0, 0.01);
  const double bound = std::max(10.0 - 1.0, 1.0 - two.low_value());
  CHECK(two.sub_exponential_norm() <= (bound + 1.0) / std::log(2.0) + 1e-9);
}

TEST_CASE("two-point normalization") {
  const NoiseDistribution normalized = NoiseDistribution::two_point(10.0, 0.01);
  CHECK(normalized.low_value() == doctest::Approx((1.0 - 0.1) / 0.99));
  CHECK(normalized.mean() == doctest::Approx(1.0));

  const NoiseDistribution raw = NoiseDistribution::two_point(10.0, 0.01, false);
  CHECK(raw.low_value() == 1.0);
  CHECK(raw.mean() > 1.0);
  CHECK(raw.quantile(0.5) == 1.0);
  CHECK(raw.quantile(0.999) == 10.0);
  CHECK_THROWS(NoiseDistribution::two_point(10.0, 0.2));
}
