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

#ifndef NOISYLS_OBJECTIVE_HPP_
#define NOISYLS_OBJECTIVE_HPP_

#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "noisyls/subset.hpp"

namespace noisyls {

/// Monotone submodular set functions from intrinsically submodular families:
/// modular (additive weights), weighted coverage, and facility location.
/// evaluate({}) == 0 for every family.
class Objective {
 public:
  static Objective modular(std::vector<double> weights);
  // covers[e] lists the items covered by element e; item weights >= 0.
  static Objective coverage(int n, int item_count,
                            std::vector<std::vector<int>> covers,
                            std::vector<double> item_weights);
  // utility[client][element] >= 0; f(S) = sum_client max_{e in S} utility.
  static Objective facility(std::vector<std::vector<double>> utility);

  int ground_size() const { return n_; }

  double evaluate(const Subset& s) const;
  /// f(S+x) - f(S); throws if x is already in S.
  double marginal(const Subset& s, int x) const;

  enum class Kind { kModular, kCoverage, kFacility };
  Kind kind() const { return kind_; }

 private:
  Objective() = default;
  void validate_subset(const Subset& s) const;

  int n_ = 0;
  Kind kind_ = Kind::kModular;

  std::vector<double> weights_;  // modular

  int item_count_ = 0;  // coverage
  std::vector<std::vector<std::uint64_t>> cover_masks_;
  std::vector<double> item_weights_;

  std::vector<std::vector<double>> utility_;  // facility, [client][element]
};

struct SubmodularityWitness {
  Subset smaller, larger;
  int element;
  double small_gain, large_gain;
  bool monotonicity_violation;  // else diminishing-returns violation
};

struct SubmodularityReport {
  bool ok = true;
  std::optional<SubmodularityWitness> witness;
};

/// Brute-force check of monotonicity and diminishing returns over every pair
/// A subset of B and x outside B. Refuses n > 14. Works on any callable so
/// tests can feed lookup tables that are not Objectives.
SubmodularityReport verify_submodular_monotone(
    const std::function<double(const Subset&)>& f, int n,
    double tolerance = 1e-12);

}  // namespace noisyls

#endif  // NOISYLS_OBJECTIVE_HPP_
