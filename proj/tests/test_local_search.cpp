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

#include "doctest.h"
#include "noisyls/instance.hpp"
#include "noisyls/local_search.hpp"
#include "noisyls/surrogate.hpp"

using noisyls::ApproxOracle;
using noisyls::CoefficientTable;
using noisyls::ConstraintOracle;
using noisyls::NLSConfig;
using noisyls::Objective;
using noisyls::Subset;
using noisyls::ValueFn;

namespace {

// Exact, noise-free evaluator of the auxiliary function of the one-element
// smoothing surrogate; alpha = delta = 0.
ApproxOracle exact_phi_oracle(const Objective& f, int n,
                              const CoefficientTable& table) {
  ApproxOracle oracle;
  ValueFn exact = [&f](const Subset& s) { return f.evaluate(s); };
  oracle.evaluate = [exact, n, &table](const Subset& s, std::uint64_t) {
    return noisyls::phi_coefficient_form(exact, s, n, table);
  };
  return oracle;
}

}  // namespace

TEST_CASE("iteration cap evaluates its closed form") {
  CHECK(noisyls::iteration_cap(0.0, 1.0, 5) == 1);

  // Independent direct evaluation of ceil(log_{1+step} of the ratio).
  const double ratio = 2.0 * 1.001 / (1.0 - 2.0 * 11 * 0.001);
  const long long direct = static_cast<long long>(
      std::ceil(std::log(ratio) / std::log(1.01)));
  CHECK(noisyls::iteration_cap(0.001, 0.01, 10) == direct);

  CHECK_THROWS(noisyls::iteration_cap(1.0 / (2.0 * 11), 0.01, 10));
  CHECK_THROWS(noisyls::iteration_cap(0.1, 0.01, 10));
  CHECK_THROWS(noisyls::iteration_cap(0.001, 0.0, 10));
}

TEST_CASE("parameter selection follows the rank and accuracy") {
  const auto params = noisyls::choose_parameters(0.2, 8);
  const double expected = 0.2 / (4.0 * 8 * std::log(8.0));
  CHECK(params.alpha == doctest::Approx(expected).epsilon(1e-12));
  CHECK(params.step == doctest::Approx(expected).epsilon(1e-12));
  CHECK(params.alpha == doctest::Approx(0.003006).epsilon(1e-3));
  const long long budget = static_cast<long long>(
      std::ceil(5.0 * 8 * std::log(8.0) / 0.2));
  CHECK(budget == 416);
  CHECK(params.iterations <= budget);
  CHECK(params.iterations ==
        noisyls::iteration_cap(params.alpha, params.step, 8));

  CHECK_THROWS(noisyls::choose_parameters(0.2, 1));
  CHECK_THROWS(noisyls::choose_parameters(0.0, 8));
  CHECK_THROWS(noisyls::choose_parameters(0.5, 8));
}

TEST_CASE("exact-oracle search reaches the noise-free ratio") {
  CoefficientTable table;
  for (std::uint64_t seed : {1, 2, 3, 4, 5}) {
    const noisyls::InstanceSpec spec =
        noisyls::generate_random_coverage(12, 18, 0.25, 4, seed);
    const Objective f = spec.build_objective();
    const ConstraintOracle c = ConstraintOracle::uniform(12, 4);
    const ApproxOracle oracle = exact_phi_oracle(f, 12, table);
    const NLSConfig cfg{1e-6, noisyls::iteration_cap(0.0, 1e-6, 4), false};
    const auto [out, trace] = noisyls::nls(oracle, c, cfg);

    CHECK(c.is_independent(out));
    CHECK(out.size() == 4);
    const double opt = noisyls::brute_force_opt(f, c).second;
    CHECK(f.evaluate(out) >= 0.632 * opt - 1e-4);
    CHECK(trace.greedy_states.size() == 4);
    CHECK(trace.approx_calls <= (cfg.iteration_cap + 1) * 4 * 12);
  }
}

TEST_CASE("final state is locally optimal under the exact oracle") {
  CoefficientTable table;
  const noisyls::InstanceSpec spec =
      noisyls::generate_random_coverage(10, 14, 0.3, 3, 9);
  const Objective f = spec.build_objective();
  const ConstraintOracle c = ConstraintOracle::uniform(10, 3);
  const ApproxOracle oracle = exact_phi_oracle(f, 10, table);
  const double step = 1e-9;
  const auto [out, trace] =
      noisyls::nls(oracle, c, {step, noisyls::iteration_cap(0.0, step, 3), false});

  const double phi_out = oracle.evaluate(out, 0);
  for (int x : out.ids()) {
    for (int y = 0; y < 10; ++y) {
      if (out.contains(y)) continue;
      const Subset swapped = out.minus(x).plus(y);
      if (!c.is_independent(swapped)) continue;
      CHECK(oracle.evaluate(swapped, 0) <= (1.0 + step) * phi_out);
    }
  }
  // Accepted states climb by at least the threshold factor.
  for (const auto& swap : trace.swaps) {
    CHECK(swap.new_value >= (1.0 + step) * swap.old_value);
  }
}

TEST_CASE("constant oracle leaves the greedy base untouched") {
  ApproxOracle flat;
  flat.evaluate = [](const Subset&, std::uint64_t) { return 1.0; };
  const ConstraintOracle c = ConstraintOracle::uniform(8, 3);

  const auto [out, trace] = noisyls::nls(flat, c, {0.01, 50, false});
  CHECK(out == Subset({0, 1, 2}));
  CHECK(trace.swaps.empty());

  // Strict mode still accepts nothing but keeps scanning all iterations.
  const auto [strict_out, strict_trace] = noisyls::nls(flat, c, {0.01, 50, true});
  CHECK(strict_out == out);
  CHECK(strict_trace.swaps.empty());
  CHECK(strict_trace.approx_calls > trace.approx_calls);
  CHECK(strict_trace.approx_calls <= (50 + 1) * 3 * 8);
}

TEST_CASE("search is deterministic and respects partition feasibility") {
  CoefficientTable table;
  const noisyls::InstanceSpec spec =
      noisyls::generate_random_coverage(8, 12, 0.35, 4, 13);
  const Objective f = spec.build_objective();
  const ConstraintOracle c =
      ConstraintOracle::partition(8, {{0, 1, 2, 3}, {4, 5, 6, 7}}, {2, 2});
  const ApproxOracle oracle = exact_phi_oracle(f, 8, table);
  const NLSConfig cfg{1e-4, 40, false};

  const auto [first, first_trace] = noisyls::nls(oracle, c, cfg);
  const auto [second, second_trace] = noisyls::nls(oracle, c, cfg);
  CHECK(first == second);
  CHECK(first_trace.approx_calls == second_trace.approx_calls);
  CHECK(first_trace.swaps.size() == second_trace.swaps.size());
  CHECK(c.is_independent(first));
  CHECK(first.size() == c.rank());
}
