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

#include "noisyls/coefficients.hpp"

#include <cmath>
#include <stdexcept>

namespace noisyls {
namespace {

double log_beta(double a, double b) {
  return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

}  // namespace

double CoefficientTable::compute(int s, int t) {
  double total = 0.0;
  double log_kfact = 0.0;
  for (int k = 0;; ++k) {
    if (k > 0) log_kfact += std::log(static_cast<double>(k));
    const double term = std::exp(log_beta(t + k + 1, s - t + 1) - log_kfact);
    total += term;
    // Term ratio is (t+k+1)/((s+k+2)(k+1)) < 1/(k+1), so the tail after a
    // small term is below twice that term.
    if (k >= 1 && term < 0.5e-13) break;
    if (k > 200) throw std::runtime_error("m coefficient series did not settle");
  }
  return total / (M_E - 1.0);
}

double CoefficientTable::m(int s, int t) const {
  if (s < 0 || t < -1 || t > s) {
    throw std::invalid_argument("CoefficientTable::m: need -1 <= t <= s");
  }
  if (t == -1) return 0.0;
  std::lock_guard<std::mutex> lock(mu_);
  if (static_cast<int>(rows_.size()) <= s) rows_.resize(s + 1);
  auto& row = rows_[s];
  if (row.empty()) {
    row.resize(s + 1);
    for (int tt = 0; tt <= s; ++tt) row[tt] = compute(s, tt);
  }
  return row[t];
}

double CoefficientTable::harmonic(int k) const {
  if (k < 0) throw std::invalid_argument("harmonic: negative index");
  std::lock_guard<std::mutex> lock(mu_);
  if (harmonics_.empty()) harmonics_.push_back(0.0);
  while (static_cast<int>(harmonics_.size()) <= k) {
    harmonics_.push_back(harmonics_.back() + 1.0 / harmonics_.size());
  }
  return harmonics_[k];
}

double CoefficientTable::log_binomial(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("log_binomial: k out of range");
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

}  // namespace noisyls
