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
#include "noisyls/objective.hpp"
#include "noisyls/rng.hpp"
#include "noisyls/subset.hpp"

using noisyls::Objective;
using noisyls::Subset;

TEST_CASE("subsets canonicalize to ascending unique ids") {
  const Subset s({3, 1, 3, 2});
  CHECK(s.ids() == std::vector<int>{1, 2, 3});
  CHECK(s.size() == 3);
  CHECK(s.contains(2));
  CHECK(!s.contains(0));
  CHECK_THROWS(Subset({-1, 2}));
  CHECK_THROWS(s.plus(1));
  CHECK_THROWS(s.minus(0));
  CHECK(s.plus(0).ids() == std::vector<int>{0, 1, 2, 3});
  CHECK(s.minus(2).ids() == std::vector<int>{1, 3});
  CHECK(s.unite(Subset({0, 2})).ids() == std::vector<int>{0, 1, 2, 3});
  CHECK(s.intersect(Subset({2, 5})).ids() == std::vector<int>{2});
  CHECK(s.difference(Subset({2, 5})).ids() == std::vector<int>{1, 3});
  CHECK(s.to_string() == "{1,2,3}");
}

TEST_CASE("stable keys depend on the set, not the build order") {
  const Subset a({4, 1, 7});
  const Subset b({7, 4, 1});
  CHECK(a.stable_key(5) == b.stable_key(5));
  CHECK(a.stable_key(5) != a.stable_key(6));
  CHECK(a.stable_key(5) != Subset({1, 4}).stable_key(5));
  // Size is part of the encoding, so nesting cannot collide trivially.
  CHECK(Subset({1}).stable_key(0) != Subset({1, 4}).stable_key(0));
}

TEST_CASE("modular objective evaluation") {
  const Objective f = Objective::modular({2, 5, 1});
  CHECK(f.evaluate(Subset()) == 0.0);
  CHECK(f.evaluate(Subset({0, 2})) == 3.0);
  CHECK(f.marginal(Subset({0}), 1) == 5.0);
  CHECK_THROWS(f.marginal(Subset({0}), 0));
  CHECK_THROWS(f.evaluate(Subset({3})));
  CHECK_THROWS(Objective::modular({1, -1}));

  const Objective unit = Objective::modular({1, 1, 1});
  CHECK(unit.evaluate(Subset()) == 0.0);
}

TEST_CASE("coverage objective evaluation") {
  // Element 0 covers items {0,1}; element 1 covers {1,2}; unit weights.
  const Objective f = Objective::coverage(2, 3, {{0, 1}, {1, 2}}, {1, 1, 1});
  CHECK(f.evaluate(Subset()) == 0.0);
  CHECK(f.evaluate(Subset({0, 1})) == 3.0);
  CHECK(f.marginal(Subset({0}), 1) == 1.0);
  CHECK_THROWS(Objective::coverage(2, 3, {{0, 3}, {}}, {1, 1, 1}));

  // Weighted items past one word exercise the popcount path.
  std::vector<double> weights(130, 0.5);
  std::vector<std::vector<int>> covers{{0, 64, 129}, {64, 128}};
  const Objective wide = Objective::coverage(2, 130, covers, weights);
  CHECK(wide.evaluate(Subset({0})) == doctest::Approx(1.5));
  CHECK(wide.evaluate(Subset({0, 1})) == doctest::Approx(2.0));
}

TEST_CASE("facility objective evaluation") {
  const Objective f = Objective::facility({{0.2, 0.9}, {0.7, 0.1}});
  CHECK(f.evaluate(Subset()) == 0.0);
  CHECK(f.evaluate(Subset({0})) == doctest::Approx(0.9));
  CHECK(f.evaluate(Subset({0, 1})) == doctest::Approx(0.9 + 0.7));
  CHECK_THROWS(Objective::facility({{0.2}, {0.7, 0.1}}));
}

TEST_CASE("evaluation is deterministic") {
  const Objective f = Objective::facility({{0.21, 0.93, 0.4}, {0.7, 0.1, 0.6}});
  const Subset s({0, 2});
  const double first = f.evaluate(s);
  for (int i = 0; i < 100; ++i) CHECK(f.evaluate(s) == first);
}

TEST_CASE("submodularity checker accepts the built-in families") {
  const Objective modular = Objective::modular({3, 1, 4, 1, 5});
  CHECK(noisyls::verify_submodular_monotone(
            [&](const Subset& s) { return modular.evaluate(s); }, 5)
            .ok);

  const Objective coverage = Objective::coverage(
      6, 8, {{0, 1}, {1, 2}, {2, 3, 4}, {4}, {5, 6}, {6, 7, 0}},
      {1, 2, 1, 1, 3, 1, 2, 1});
  CHECK(noisyls::verify_submodular_monotone(
            [&](const Subset& s) { return coverage.evaluate(s); }, 6)
            .ok);
}

TEST_CASE("submodularity checker rejects a supermodular table") {
  const auto quadratic = [](const Subset& s) {
    return static_cast<double>(s.size()) * s.size();
  };
  const auto report = noisyls::verify_submodular_monotone(quadratic, 4);
  CHECK(!report.ok);
  REQUIRE(report.witness.has_value());
  CHECK(!report.witness->monotonicity_violation);
  CHECK(report.witness->small_gain < report.witness->large_gain);
  CHECK_THROWS(noisyls::verify_submodular_monotone(quadratic, 15));
}

TEST_CASE("diminishing returns hold across random nested pairs") {
  const Objective f = Objective::coverage(
      10, 12,
      {{0, 1, 2}, {2, 3}, {4}, {5, 6}, {6, 7}, {8}, {9, 10}, {10, 11}, {0, 11},
       {3, 8}},
      {1, 1, 2, 1, 1, 1, 2, 1, 1, 1, 1, 2});
  noisyls::Rng rng(42, 0);
  std::vector<int> all(10);
  for (int i = 0; i < 10; ++i) all[i] = i;
  for (int trial = 0; trial < 200; ++trial) {
    const Subset big = rng.uniform_subset(all, rng.uniform_int(10));
    Subset small = big;
    for (int e : big.ids()) {
      if (rng.uniform_int(2)) small = small.minus(e);
    }
    for (int x = 0; x < 10; ++x) {
      if (big.contains(x)) continue;
      const double gain_small = f.marginal(small, x);
      const double gain_big = f.marginal(big, x);
      CHECK(gain_small >= gain_big - 1e-12);
      CHECK(gain_big >= -1e-12);
    }
  }
}
