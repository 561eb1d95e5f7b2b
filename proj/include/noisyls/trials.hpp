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

#ifndef NOISYLS_TRIALS_HPP_
#define NOISYLS_TRIALS_HPP_

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "noisyls/instance.hpp"
#include "noisyls/solvers.hpp"

namespace noisyls {

struct TrialConfig {
  /// Builds the instance for one trial seed; generators bake the seed in so
  /// every seed gets its own instance.
  std::function<InstanceSpec(std::uint64_t seed)> make_instance;
  std::vector<std::uint64_t> seeds;
  std::vector<std::string> algorithms;  // regime strings accepted by solve()
  double epsilon = 0.2;
  SolverOptions options;
  bool compute_opt = true;
};

struct ResultRow {
  std::uint64_t seed = 0;
  std::string algorithm;
  int n = 0;
  int r = 0;
  double epsilon = 0.0;
  double f_value = 0.0;
  double opt = -1.0;    // -1 when not brute-forced
  double ratio = -1.0;
  long long queries = 0;
  double wall_seconds = 0.0;
  Subset chosen;
};

/// Noise PRF seed and algorithm-randomness seed for a trial seed; the two
/// streams never coincide.
std::uint64_t noise_seed_for(std::uint64_t trial_seed);
std::uint64_t algo_seed_for(std::uint64_t trial_seed);

/// One row per (seed, algorithm), ordered that way. Throws when a solver
/// emits an infeasible set.
std::vector<ResultRow> run_trials(const TrialConfig& cfg);

std::string csv_header();
void write_csv(const std::vector<ResultRow>& rows, std::ostream& out);

}  // namespace noisyls

#endif  // NOISYLS_TRIALS_HPP_
