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

#include <vector>

#include "doctest.h"
#include "noisyls/matroid.hpp"

using noisyls::ConstraintOracle;
using noisyls::Subset;

TEST_CASE("uniform constraints test the size") {
  const ConstraintOracle c = ConstraintOracle::uniform(10, 3);
  CHECK(c.is_independent(Subset({1, 5, 9})));
  CHECK(!c.is_independent(Subset({1, 5, 8, 9})));
  CHECK(c.rank() == 3);
  CHECK(ConstraintOracle::uniform(20, 7).rank() == 7);
  CHECK_THROWS(c.is_independent(Subset({10})));
}

TEST_CASE("partition constraints respect per-block caps") {
  const ConstraintOracle c =
      ConstraintOracle::partition(4, {{0, 1}, {2, 3}}, {1, 1});
  CHECK(c.is_independent(Subset({0, 2})));
  CHECK(!c.is_independent(Subset({0, 1})));
  CHECK(c.rank() == 2);
  CHECK(c.block_of(3) == 1);

  const ConstraintOracle wide =
      ConstraintOracle::partition(7, {{0, 1}, {2, 3}, {4, 5, 6}}, {1, 1, 2});
  CHECK(wide.rank() == 4);

  CHECK_THROWS(ConstraintOracle::partition(4, {{0, 1}, {3}}, {1, 1}));
  CHECK_THROWS(ConstraintOracle::partition(4, {{0, 1}, {1, 2, 3}}, {1, 1}));
  CHECK_THROWS(ConstraintOracle::partition(4, {{0, 1}, {2, 3}}, {1, 0}));
}

TEST_CASE("contraction pins a set aside") {
  const ConstraintOracle c = ConstraintOracle::contraction(
      ConstraintOracle::uniform(10, 5), Subset({0, 1}));
  CHECK(c.is_independent(Subset({2, 3, 4})));
  CHECK(!c.is_independent(Subset({2, 3, 4, 5})));
  CHECK(!c.is_independent(Subset({0, 2})));
  CHECK(c.rank() == 3);

  const ConstraintOracle p = ConstraintOracle::contraction(
      ConstraintOracle::partition(4, {{0, 1}, {2, 3}}, {1, 1}), Subset({0}));
  CHECK(p.rank() == 1);
  CHECK_THROWS(ConstraintOracle::contraction(ConstraintOracle::uniform(4, 1),
                                             Subset({0, 1})));
}

TEST_CASE("truncation is the size-capped base constraint") {
  const ConstraintOracle base =
      ConstraintOracle::partition(6, {{0, 1, 2}, {3, 4, 5}}, {2, 2});
  const ConstraintOracle cut = ConstraintOracle::truncation(base, 3);
  for (std::uint32_t mask = 0; mask < 64; ++mask) {
    std::vector<int> ids;
    for (int i = 0; i < 6; ++i) {
      if (mask & (1u << i)) ids.push_back(i);
    }
    const Subset s(ids);
    CHECK(cut.is_independent(s) ==
          (base.is_independent(s) && s.size() <= 3));
  }
  CHECK(cut.rank() == 3);
}

TEST_CASE("contraction composes with rank") {
  const ConstraintOracle base =
      ConstraintOracle::partition(8, {{0, 1, 2, 3}, {4, 5, 6, 7}}, {2, 2});
  const Subset pinned({0, 4});
  const ConstraintOracle c = ConstraintOracle::contraction(base, pinned);
  CHECK(c.rank() == base.rank() - pinned.size());
}

TEST_CASE("extend_to_base fills greedily by ascending id") {
  CHECK(ConstraintOracle::uniform(8, 3).extend_to_base(Subset({5})).ids() ==
        std::vector<int>{0, 1, 5});
  CHECK(ConstraintOracle::partition(4, {{0, 1}, {2, 3}}, {1, 1})
            .extend_to_base(Subset())
            .ids() == std::vector<int>{0, 2});
  CHECK_THROWS(
      ConstraintOracle::uniform(4, 1).extend_to_base(Subset({0, 1})));

  const ConstraintOracle ex = ConstraintOracle::explicit_sets(
      3, {Subset(), Subset({0}), Subset({2}), Subset({0, 2})});
  CHECK(ex.extend_to_base(Subset({0, 2})) == Subset({0, 2}));
}

TEST_CASE("exchange-axiom checkers validate and reject") {
  const ConstraintOracle good =
      ConstraintOracle::partition(5, {{0, 1, 2}, {3, 4}}, {1, 1});
  CHECK(noisyls::check_downward_closed(good));
  CHECK(noisyls::check_exchange_axiom(good));

  // {0,1} and {2} but no way to grow {2}: exchange fails.
  const ConstraintOracle bad = ConstraintOracle::explicit_sets(
      3, {Subset(), Subset({0}), Subset({1}), Subset({2}), Subset({0, 1})});
  CHECK(noisyls::check_downward_closed(bad));
  CHECK(!noisyls::check_exchange_axiom(bad));
}

TEST_CASE("base exchange bijection by brute force") {
  const ConstraintOracle u = ConstraintOracle::uniform(4, 2);
  const auto identity =
      noisyls::brualdi_bijection_bruteforce(u, Subset({1, 3}), Subset({1, 3}));
  CHECK(identity.at(1) == 1);
  CHECK(identity.at(3) == 3);

  const auto swap =
      noisyls::brualdi_bijection_bruteforce(u, Subset({0, 1}), Subset({2, 3}));
  CHECK(swap.at(0) == 2);
  CHECK(swap.at(1) == 3);

  const ConstraintOracle p =
      ConstraintOracle::partition(4, {{0, 1}, {2, 3}}, {1, 1});
  const auto blocks =
      noisyls::brualdi_bijection_bruteforce(p, Subset({0, 2}), Subset({1, 3}));
  CHECK(blocks.at(0) == 1);
  CHECK(blocks.at(2) == 3);

  // A broken oracle (not a matroid) admits no bijection.
  const ConstraintOracle broken = ConstraintOracle::explicit_sets(
      4, {Subset(), Subset({0}), Subset({1}), Subset({2}), Subset({3}),
          Subset({0, 1}), Subset({2, 3})});
  CHECK_THROWS(
      noisyls::brualdi_bijection_bruteforce(broken, Subset({0, 1}),
                                            Subset({2, 3})));
}

TEST_CASE("partition bijection survives every partial swap") {
  const ConstraintOracle p =
      ConstraintOracle::partition(5, {{0, 1, 2}, {3, 4}}, {2, 1});
  const Subset b1({0, 1, 3});
  const Subset b2({1, 2, 4});
  const auto sigma = noisyls::sbo_bijection_partition(p, b1, b2);
  CHECK(sigma.at(1) == 1);
  CHECK(sigma.at(0) == 2);
  CHECK(sigma.at(3) == 4);
  CHECK(noisyls::sbo_bijection_partition(p, b1, b1).at(0) == 0);

  for (std::uint32_t mask = 0; mask < 8; ++mask) {
    Subset swapped = b1;
    for (std::size_t i = 0; i < b1.ids().size(); ++i) {
      if (!(mask & (1u << i))) continue;
      const int from = b1.ids()[i];
      const int to = sigma.at(from);
      if (from != to) swapped = swapped.minus(from).plus(to);
    }
    CHECK(p.is_independent(swapped));
    CHECK(swapped.size() == p.rank());
  }
}
