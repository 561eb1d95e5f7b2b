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

#ifndef NOISYLS_ESTIMATOR_HPP_
#define NOISYLS_ESTIMATOR_HPP_

#include <cstdint>

#include "noisyls/coefficients.hpp"
#include "noisyls/noise.hpp"
#include "noisyls/rng.hpp"
#include "noisyls/subset.hpp"
#include "noisyls/tau.hpp"

namespace noisyls {

struct EstimatorConfig {
  long long sample_count = 1;  // M; each estimate spends exactly M queries
  double alpha = 0.0;          // accuracy target, recorded for reporting
  double delta = 0.0;          // failure-probability target, recorded
};

struct TauDraw {
  Subset member;  // the sampled set T
  bool inside;
  int subset_size;  // the sampled class (t, or |S| for outside draws)
};

/// One draw from the tau-proportional distribution over the support of the
/// auxiliary function of A.
TauDraw sample_tau_member(Rng& rng, const TauClasses& tau, const Subset& a,
                          int n);

/// Importance-sampling estimate of the auxiliary function of the h
/// surrogate: (sum of tau) times the mean of sample_count noisy values at
/// tau-proportional draws.
double estimate_phi_h(NoisyOracle& oracle, const Subset& a,
                      const CoefficientTable& table, const EstimatorConfig& cfg,
                      Rng& rng);

/// s(A) = sum over T subset of A of m(|A|-1, |T|-1).
double hH_normalizer(const CoefficientTable& table, int a);

/// One draw for the h_H estimator: T subset of A with |T| = t sampled with
/// weight C(|A|, t) * m(|A|-1, t-1), unioned with a uniform subset of H.
Subset sample_hH_member(Rng& rng, const CoefficientTable& table,
                        const Subset& a, const Subset& h_set);

/// Importance-sampling estimate of the auxiliary function of the h_H
/// surrogate: s(A) times the mean of sample_count noisy values.
double estimate_phi_hH(NoisyOracle& oracle, const Subset& a,
                       const Subset& h_set, const CoefficientTable& table,
                       const EstimatorConfig& cfg, Rng& rng);

}  // namespace noisyls

#endif  // NOISYLS_ESTIMATOR_HPP_
