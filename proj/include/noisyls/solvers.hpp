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

#ifndef NOISYLS_SOLVERS_HPP_
#define NOISYLS_SOLVERS_HPP_

#include <string>
#include <vector>

#include "noisyls/local_search.hpp"
#include "noisyls/matroid.hpp"
#include "noisyls/noise.hpp"

namespace noisyls {

struct SolverOptions {
  double sample_multiplier = 1.0;  // scales the default sample counts
  bool strict_paper = false;       // disable the early local-search exit
  std::uint64_t seed = 0;          // algorithm-side randomness

  // Desk-scale test hooks; -1 keeps the production formula.
  int h_size_override = -1;            // pinned-set size of the large-r solver
  int part_size_override = -1;         // target part size of the SBO solver
  long long sample_count_override = -1;

  // Bundle-greedy baseline.
  int bundle_size = 3;
  long long ball_sample_cap = 10000;
  // Resolve exact noisy-value ties in the final member pick against the
  // algorithm (smallest true value wins). A guarantee must survive every
  // tie-breaking rule; this exposes the worst case, which the default
  // smallest-id rule averages away.
  bool adversarial_ties = false;
};

struct SolverReport {
  std::string algorithm;
  Subset chosen;
  double true_value = 0.0;    // noise-free f, evaluated out of band
  long long noisy_queries = 0;  // oracle counter delta for this run
  std::vector<NLSTrace> traces;

  double epsilon = 0.0;
  double alpha = 0.0;
  double step = 0.0;
  double delta = 0.0;
  long long sample_count = 0;  // M per estimator call
  long long iterations = 0;    // local-search cap I
  int h_size = 0;
  double wall_seconds = 0.0;
};

/// Small-rank cardinality solver: local search on the one-element smoothing
/// surrogate over a (r-1)-uniform constraint, then one noisy-max addition.
SolverReport solve_cardinality_small(NoisyOracle& oracle, int r, double epsilon,
                                     const SolverOptions& opts = {});

/// Large-rank cardinality solver: pin H of size ceil(3 ln n), local search on
/// the H-subset smoothing surrogate over the contracted constraint, return
/// the union with H.
SolverReport solve_cardinality_large(NoisyOracle& oracle, int r, double epsilon,
                                     const SolverOptions& opts = {});

/// Small-rank matroid solver: local search over the rank-(r-1) truncation,
/// an unconstrained noisy-max addition, then a comparison on the
/// deletion-average auxiliary decides between the search output and the
/// added singleton. Requires rank >= 3.
SolverReport solve_matroid_small(NoisyOracle& oracle,
                                 const ConstraintOracle& constraint,
                                 double epsilon, const SolverOptions& opts = {});

/// Large-rank matroid solver: split a base into two halves, run the pinned
/// local search per half, keep the candidate with the larger noisy
/// deletion-average. Requires rank >= 4.
SolverReport solve_matroid_large(NoisyOracle& oracle,
                                 const ConstraintOracle& constraint,
                                 double epsilon, const SolverOptions& opts = {});

/// Partition-matroid solver exploiting strong base-orderability: split a
/// base into floor(r/l) parts and keep the best pinned local-search result.
SolverReport solve_sbo(NoisyOracle& oracle, const ConstraintOracle& constraint,
                       double epsilon, const SolverOptions& opts = {});

/// Classic greedy driven by noisy values; degradation baseline.
SolverReport baseline_greedy_noisy(NoisyOracle& oracle,
                                   const ConstraintOracle& constraint,
                                   const SolverOptions& opts = {});

/// Bundle greedy: each round scores every feasible bundle by the mean noisy
/// value over its swap ball, then adds the ball member with the largest
/// noisy value. Balls larger than ball_sample_cap are subsampled.
SolverReport baseline_bundle_greedy(NoisyOracle& oracle,
                                    const ConstraintOracle& constraint,
                                    const SolverOptions& opts = {});

/// Regime dispatch. regime is one of: auto, card-small, card-large,
/// matroid-small, matroid-large, sbo, greedy, bundle-greedy. auto picks the
/// small-rank solver when r^3 <= n and the large-rank solver otherwise,
/// based on the constraint kind.
SolverReport solve(NoisyOracle& oracle, const ConstraintOracle& constraint,
                   double epsilon, const std::string& regime,
                   const SolverOptions& opts = {});

}  // namespace noisyls

#endif  // NOISYLS_SOLVERS_HPP_
