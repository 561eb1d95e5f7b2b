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

#ifndef NOISYLS_MATROID_HPP_
#define NOISYLS_MATROID_HPP_

#include <map>
#include <memory>
#include <set>
#include <vector>

#include "noisyls/subset.hpp"

namespace noisyls {

/// Independence oracle over ground set {0, ..., n-1}. Variants: uniform,
/// partition, contraction (pin a set H), truncation (cap the size), and an
/// explicit test-only list of independent sets.
class ConstraintOracle {
 public:
  enum class Kind { kUniform, kPartition, kContraction, kTruncation, kExplicit };

  static ConstraintOracle uniform(int n, int r);
  // blocks must partition {0..n-1}; caps[i] >= 1 so single elements are
  // feasible.
  static ConstraintOracle partition(int n, std::vector<std::vector<int>> blocks,
                                    std::vector<int> caps);
  // S independent iff S avoids H and S union H is independent in base.
  static ConstraintOracle contraction(ConstraintOracle base, Subset pinned);
  static ConstraintOracle truncation(ConstraintOracle base, int cap);
  // Test-only; sets are closed downward by the caller's construction and
  // verified by the exchange-axiom checker in tests.
  static ConstraintOracle explicit_sets(int n, std::vector<Subset> independent);

  Kind kind() const { return kind_; }
  int ground_size() const { return n_; }
  const Subset& pinned() const { return pinned_; }  // contraction only

  bool is_independent(const Subset& s) const;
  int rank() const;
  /// Greedy ascending-id completion of an independent set to a base.
  Subset extend_to_base(const Subset& s) const;
  /// Elements that may belong to some independent set (skips e.g. pinned ids).
  std::vector<int> ground_elements() const;

  /// For partition oracles: the block index of each element.
  int block_of(int e) const;
  const std::vector<int>& caps() const { return caps_; }

 private:
  ConstraintOracle() = default;

  Kind kind_ = Kind::kUniform;
  int n_ = 0;
  int r_ = 0;  // uniform rank / truncation cap

  std::vector<int> block_of_;  // partition
  std::vector<int> caps_;

  std::shared_ptr<const ConstraintOracle> base_;  // contraction / truncation
  Subset pinned_;

  std::set<Subset> explicit_;  // test-only
};

/// Exhaustive checks and exchange utilities for small ground sets; test use
/// only.
bool check_downward_closed(const ConstraintOracle& c);
bool check_exchange_axiom(const ConstraintOracle& c);

/// Bijection pi: A -> B with A - a + pi(a) a base for all a, identity on the
/// intersection; exhaustive matching search, lexicographically least. n <= 12.
std::map<int, int> brualdi_bijection_bruteforce(const ConstraintOracle& c,
                                                const Subset& a,
                                                const Subset& b);

/// Partition-matroid bijection between bases: identity on the intersection,
/// ascending pairing within each block on the rest. Every partial swap
/// preserves basehood.
std::map<int, int> sbo_bijection_partition(const ConstraintOracle& p,
                                           const Subset& b1, const Subset& b2);

}  // namespace noisyls

#endif  // NOISYLS_MATROID_HPP_
