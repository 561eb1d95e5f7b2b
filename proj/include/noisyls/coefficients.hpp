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

#ifndef NOISYLS_COEFFICIENTS_HPP_
#define NOISYLS_COEFFICIENTS_HPP_

#include <mutex>
#include <vector>

namespace noisyls {

/// Cached mixing coefficients
///   m(s, t) = (e-1)^{-1} * integral_0^1 e^p p^t (1-p)^{s-t} dp,
/// with the convention m(s, -1) = 0, plus harmonic numbers. Values are
/// computed by the rapidly convergent series
///   m(s, t) = (e-1)^{-1} * sum_k Beta(t+k+1, s-t+1) / k!
/// truncated once the tail drops below 1e-13.
class CoefficientTable {
 public:
  CoefficientTable() = default;

  /// Requires -1 <= t <= s; accurate to 1e-10 or better.
  double m(int s, int t) const;

  /// H_k = sum_{i=1}^{k} 1/i; H_0 = 0.
  double harmonic(int k) const;

  /// ln C(n, k); exact inputs, lgamma-based.
  static double log_binomial(int n, int k);

 private:
  static double compute(int s, int t);

  mutable std::mutex mu_;
  mutable std::vector<std::vector<double>> rows_;  // rows_[s][t]
  mutable std::vector<double> harmonics_;
};

}  // namespace noisyls

#endif  // NOISYLS_COEFFICIENTS_HPP_
