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

#include "noisyls/trials.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace noisyls {

std::uint64_t noise_seed_for(std::uint64_t trial_seed) {
  return mix64(trial_seed ^ 0x6e6f697365ULL);
}

std::uint64_t algo_seed_for(std::uint64_t trial_seed) {
  return mix64(trial_seed ^ 0x616c676fULL);
}

std::vector<ResultRow> run_trials(const TrialConfig& cfg) {
  if (cfg.seeds.empty()) throw std::invalid_argument("run_trials: no seeds");
  if (cfg.algorithms.empty()) {
    throw std::invalid_argument("run_trials: no algorithms");
  }
  if (!cfg.make_instance) {
    throw std::invalid_argument("run_trials: no instance source");
  }
  std::vector<ResultRow> rows;
  for (std::uint64_t seed : cfg.seeds) {
    const InstanceSpec spec = cfg.make_instance(seed);
    const Objective objective = spec.build_objective();
    const ConstraintOracle constraint = spec.build_constraint();
    const int r = constraint.rank();
    double opt = -1.0;
    if (cfg.compute_opt) {
      opt = brute_force_opt(objective, constraint).second;
    }
    for (const std::string& algorithm : cfg.algorithms) {
      NoisyOracle oracle(objective, spec.build_noise(), noise_seed_for(seed));
      SolverOptions opts = cfg.options;
      opts.seed = algo_seed_for(seed);
      const SolverReport report =
          solve(oracle, constraint, cfg.epsilon, algorithm, opts);
      if (!constraint.is_independent(report.chosen)) {
        throw std::runtime_error("run_trials: infeasible output from " +
                                 algorithm);
      }
      ResultRow row;
      row.seed = seed;
      row.algorithm = report.algorithm;
      row.n = spec.n;
      row.r = r;
      row.epsilon = cfg.epsilon;
      row.f_value = report.true_value;
      row.opt = opt;
      if (opt > 0.0) row.ratio = report.true_value / opt;
      row.queries = report.noisy_queries;
      row.wall_seconds = report.wall_seconds;
      row.chosen = report.chosen;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string csv_header() {
  return "seed,algorithm,n,r,epsilon,f_value,opt,ratio,queries,wall_seconds";
}

void write_csv(const std::vector<ResultRow>& rows, std::ostream& out) {
  out << csv_header() << '\n';
  for (const ResultRow& row : rows) {
    std::ostringstream line;
    line << row.seed << ',' << row.algorithm << ',' << row.n << ',' << row.r
         << ',' << row.epsilon << ',' << std::setprecision(12) << row.f_value
         << ',' << row.opt << ',' << row.ratio << ',' << row.queries << ','
         << row.wall_seconds;
    out << line.str() << '\n';
  }
}

}  // namespace noisyls
