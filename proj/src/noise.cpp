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

#include "noisyls/noise.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace noisyls {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double normal_pdf(double x) {
  return std::exp(-0.5 * x * x) / std::sqrt(2.0 * M_PI);
}

// Acklam's rational approximation, polished with one Newton step.
double normal_inv_cdf(double p) {
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double plow = 0.02425;
  double x;
  if (p < plow) {
    const double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (p <= 1.0 - plow) {
    const double q = p - 0.5;
    const double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) *
        q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  const double err = normal_cdf(x) - p;
  x -= err / normal_pdf(x);
  return x;
}

// Simpson's rule on [lo, hi] with an even interval count.
template <typename F>
double simpson(const F& f, double lo, double hi, int intervals) {
  const double h = (hi - lo) / intervals;
  double sum = f(lo) + f(hi);
  for (int i = 1; i < intervals; ++i) {
    sum += f(lo + i * h) * (i % 2 ? 4.0 : 2.0);
  }
  return sum * h / 3.0;
}

}  // namespace

NoiseDistribution NoiseDistribution::no_noise() { return NoiseDistribution(); }

NoiseDistribution NoiseDistribution::exponential() {
  NoiseDistribution d;
  d.family_ = Family::kExponential;
  return d;
}

NoiseDistribution NoiseDistribution::uniform_band(double halfwidth) {
  if (!(halfwidth > 0.0 && halfwidth < 1.0)) {
    throw std::invalid_argument("uniform_band: halfwidth must be in (0,1)");
  }
  NoiseDistribution d;
  d.family_ = Family::kUniformBand;
  d.halfwidth_ = halfwidth;
  return d;
}

NoiseDistribution NoiseDistribution::truncated_gaussian(double sigma) {
  if (!(sigma > 0.0)) {
    throw std::invalid_argument("truncated_gaussian: sigma must be positive");
  }
  NoiseDistribution d;
  d.family_ = Family::kTruncatedGaussian;
  d.sigma_ = sigma;
  d.trunc_mean_ =
      1.0 + sigma * normal_pdf(-1.0 / sigma) / normal_cdf(1.0 / sigma);
  return d;
}

NoiseDistribution NoiseDistribution::two_point(double high, double p_high,
                                               bool normalize_mean) {
  if (!(high > 1.0) || !(p_high > 0.0 && p_high < 1.0)) {
    throw std::invalid_argument("two_point: need high > 1 and p in (0,1)");
  }
  NoiseDistribution d;
  d.family_ = Family::kTwoPoint;
  d.high_ = high;
  d.p_high_ = p_high;
  if (normalize_mean) {
    d.low_ = (1.0 - high * p_high) / (1.0 - p_high);
    if (d.low_ < 0.0) {
      throw std::invalid_argument("two_point: high*p > 1 has no mean-1 form");
    }
  } else {
    d.low_ = 1.0;
  }
  return d;
}

double NoiseDistribution::mean() const {
  if (family_ == Family::kTwoPoint) {
    return p_high_ * high_ + (1.0 - p_high_) * low_;
  }
  return 1.0;
}

double NoiseDistribution::quantile(double u) const {
  if (!(u > 0.0 && u < 1.0)) {
    throw std::invalid_argument("quantile: u must lie in (0,1)");
  }
  switch (family_) {
    case Family::kNoNoise:
      return 1.0;
    case Family::kExponential:
      return -std::log1p(-u);
    case Family::kUniformBand:
      return 1.0 - halfwidth_ + 2.0 * halfwidth_ * u;
    case Family::kTruncatedGaussian: {
      const double z = normal_cdf(1.0 / sigma_);
      const double x =
          1.0 + sigma_ * normal_inv_cdf(normal_cdf(-1.0 / sigma_) + u * z);
      return std::max(0.0, x) / trunc_mean_;
    }
    case Family::kTwoPoint:
      return u <= 1.0 - p_high_ ? low_ : high_;
  }
  return 1.0;
}

double NoiseDistribution::abs_deviation_mgf(double t) const {
  if (!(t > 0.0)) throw std::invalid_argument("abs_deviation_mgf: t <= 0");
  switch (family_) {
    case Family::kNoNoise:
      return 1.0;
    case Family::kExponential: {
      // E over [0,1]: e^{1/t} (1 - e^{-(1+1/t)}) / (1 + 1/t).
      // E over [1,inf): e^{-1} / (1 - 1/t), divergent for t <= 1.
      if (t <= 1.0) return kInf;
      const double below = std::exp(1.0 / t) * (1.0 - std::exp(-(1.0 + 1.0 / t))) /
                           (1.0 + 1.0 / t);
      const double above = std::exp(-1.0) / (1.0 - 1.0 / t);
      return below + above;
    }
    case Family::kUniformBand:
      return (t / halfwidth_) * (std::exp(halfwidth_ / t) - 1.0);
    case Family::kTruncatedGaussian: {
      const double z = normal_cdf(1.0 / sigma_);
      auto density = [&](double x) {
        return normal_pdf((x - 1.0) / sigma_) / (sigma_ * z);
      };
      auto integrand = [&](double x) {
        return std::exp(std::abs(x / trunc_mean_ - 1.0) / t) * density(x);
      };
      // Split at the kink x = trunc_mean_ and at +/- 10 sigma.
      const double hi = 1.0 + 10.0 * sigma_;
      const double mid = std::min(hi, trunc_mean_);
      double total = simpson(integrand, 0.0, mid, 4000);
      if (hi > mid) total += simpson(integrand, mid, hi, 20000);
      return total;
    }
    case Family::kTwoPoint:
      return (1.0 - p_high_) * std::exp(std::abs(low_ - 1.0) / t) +
             p_high_ * std::exp(std::abs(high_ - 1.0) / t);
  }
  return 1.0;
}

double NoiseDistribution::sub_exponential_norm() const {
  if (family_ == Family::kNoNoise) return 0.0;
  double lo = 1e-9;
  double hi = family_ == Family::kExponential ? 1.0 + 1e-9 : 1e-9;
  while (abs_deviation_mgf(hi) > 2.0) {
    hi *= 2.0;
    if (hi > 1e12) throw std::runtime_error("sub_exponential_norm: no bracket");
  }
  lo = hi / 2.0;
  if (family_ == Family::kExponential) lo = std::max(lo, 1.0);
  while ((hi - lo) / hi > 1e-7) {
    const double mid = 0.5 * (lo + hi);
    if (abs_deviation_mgf(mid) > 2.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi;
}

double hash_to_unit(std::uint64_t key) {
  return (static_cast<double>(key >> 11) + 0.5) * 0x1.0p-53;
}

NoisyOracle::NoisyOracle(const Objective& objective, NoiseDistribution dist,
                         std::uint64_t seed)
    : objective_(&objective), dist_(std::move(dist)), seed_(seed) {}

double NoisyOracle::multiplier(const Subset& s) const {
  return dist_.quantile(hash_to_unit(s.stable_key(seed_)));
}

double NoisyOracle::noisy_value(const Subset& s) {
  const double value = multiplier(s) * objective_->evaluate(s);
  count_.fetch_add(1, std::memory_order_relaxed);
  if (tracking_) {
    std::lock_guard<std::mutex> lock(track_mu_);
    ++per_set_[s];
  }
  return value;
}

void NoisyOracle::enable_tracking() { tracking_ = true; }

std::map<Subset, long long> NoisyOracle::tracked_counts() const {
  std::lock_guard<std::mutex> lock(track_mu_);
  return per_set_;
}

}  // namespace noisyls
