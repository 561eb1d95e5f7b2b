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

#include "noisyls/selfcheck.hpp"

#include <cmath>
#include <functional>

#include "noisyls/estimator.hpp"
#include "noisyls/instance.hpp"
#include "noisyls/surrogate.hpp"

namespace noisyls {
namespace {

bool report(std::ostream& out, const char* name, bool ok) {
  out << (ok ? "ok   " : "FAIL ") << name << '\n';
  return ok;
}

bool check_coefficients(std::ostream& out) {
  CoefficientTable table;
  bool ok = std::abs(table.m(0, 0) - 1.0) < 1e-12;
  ok = ok && std::abs(table.m(1, 1) - 1.0 / (M_E - 1.0)) < 1e-10;
  ok = ok && std::abs(table.m(1, 0) - (M_E - 2.0) / (M_E - 1.0)) < 1e-10;
  for (int a = 2; a <= 16 && ok; ++a) {
    double sum = 0.0;
    double sum_sq = 0.0;
    for (int t = 1; t <= a; ++t) {
      const double count = std::exp(CoefficientTable::log_binomial(a, t));
      const double value = table.m(a - 1, t - 1);
      sum += count * value;
      sum_sq += count * value * value;
    }
    ok = sum <= table.harmonic(a) + 1e-9 && sum_sq <= 3.0 + 1e-9;
  }
  return report(out, "mixing coefficients", ok);
}

bool check_tau(std::ostream& out) {
  CoefficientTable table;
  bool ok = true;
  for (int a = 2; a <= 8 && ok; ++a) {
    const TauClasses tau(table, a, 64);
    ok = tau.total_weight_squared() <= 12.0 / (64.0 * a) + 1e-12 &&
         tau.max_weight() <= 4.0 / 64.0 + 1e-12 &&
         tau.total_weight() <= 2.0 * (std::log(a) + 2.0) + 1e-12;
  }
  return report(out, "tau bounds", ok);
}

bool check_phi(std::ostream& out) {
  CoefficientTable table;
  const InstanceSpec spec = generate_random_coverage(8, 16, 0.3, 3, 11);
  const Objective objective = spec.build_objective();
  ValueFn exact = [&](const Subset& s) { return objective.evaluate(s); };
  bool ok = true;
  for (int trial = 0; trial < 10 && ok; ++trial) {
    Rng rng(17, trial);
    std::vector<int> all(8);
    for (int i = 0; i < 8; ++i) all[i] = i;
    const Subset a = rng.uniform_subset(all, 3);
    ValueFn h = [&](const Subset& s) { return surrogate_h(exact, s, 8); };
    const double by_definition = phi_exact_bruteforce(h, a, table);
    const double by_coefficients = phi_coefficient_form(exact, a, 8, table);
    const double h_a = surrogate_h(exact, a, 8);
    ok = std::abs(by_definition - by_coefficients) < 1e-9 &&
         h_a <= by_definition + 1e-9 &&
         by_definition <=
             M_E / (M_E - 1.0) * table.harmonic(3) * h_a + 1e-9;
  }
  return report(out, "auxiliary function", ok);
}

bool check_noise(std::ostream& out) {
  const Objective objective = Objective::modular({1, 1, 1, 1, 1, 1});
  NoisyOracle oracle(objective, NoiseDistribution::uniform_band(0.1), 99);
  bool ok = true;
  for (std::uint32_t mask = 1; mask < 64 && ok; ++mask) {
    std::vector<int> ids;
    for (int i = 0; i < 6; ++i) {
      if (mask & (1u << i)) ids.push_back(i);
    }
    const Subset s(ids);
    const double first = oracle.noisy_value(s);
    const double again = oracle.noisy_value(s);
    const double exact = objective.evaluate(s);
    ok = first == again && first >= 0.9 * exact - 1e-12 &&
         first <= 1.1 * exact + 1e-12;
  }
  ok = ok && oracle.query_count() == 2 * 63;
  const double kappa =
      NoiseDistribution::uniform_band(0.1).sub_exponential_norm();
  ok = ok && kappa <= 0.1 / std::log(2.0) + 1e-9;
  return report(out, "noise oracle", ok);
}

bool check_matroid(std::ostream& out) {
  const ConstraintOracle partition = ConstraintOracle::partition(
      6, {{0, 1, 2}, {3, 4, 5}}, {2, 1});
  bool ok = partition.rank() == 3 &&
            partition.is_independent(Subset({0, 1, 3})) &&
            !partition.is_independent(Subset({0, 1, 2})) &&
            check_downward_closed(partition) && check_exchange_axiom(partition);
  const auto mapping =
      sbo_bijection_partition(partition, Subset({0, 1, 3}), Subset({1, 2, 4}));
  ok = ok && mapping.at(1) == 1 && mapping.at(0) == 2 && mapping.at(3) == 4;
  return report(out, "matroid oracles", ok);
}

bool check_estimators(std::ostream& out) {
  CoefficientTable table;
  const InstanceSpec spec = generate_random_coverage(8, 16, 0.3, 3, 23);
  const Objective objective = spec.build_objective();
  NoisyOracle oracle(objective, NoiseDistribution::no_noise(), 5);
  ValueFn exact = [&](const Subset& s) { return objective.evaluate(s); };
  const Subset a({1, 4, 6});
  ValueFn h = [&](const Subset& s) { return surrogate_h(exact, s, 8); };
  const double phi = phi_exact_bruteforce(h, a, table);
  Rng rng(7, 0);
  EstimatorConfig cfg{20000, 0.0, 0.0};
  const double estimate = estimate_phi_h(oracle, a, table, cfg, rng);
  const bool ok = std::abs(estimate - phi) < 0.1 * phi;
  return report(out, "sampling estimators", ok);
}

}  // namespace

bool run_selfcheck(std::ostream& out) {
  bool ok = check_coefficients(out);
  ok &= check_tau(out);
  ok &= check_phi(out);
  ok &= check_noise(out);
  ok &= check_matroid(out);
  ok &= check_estimators(out);
  out << (ok ? "selfcheck passed" : "selfcheck FAILED") << '\n';
  return ok;
}

}  // namespace noisyls
