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

#ifndef NOISYLS_INSTANCE_HPP_
#define NOISYLS_INSTANCE_HPP_

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "noisyls/matroid.hpp"
#include "noisyls/noise.hpp"
#include "noisyls/objective.hpp"

namespace noisyls {

/// Plain serializable description of one problem instance: objective block,
/// constraint block, noise block, and the noise seed.
struct InstanceSpec {
  std::string name;
  int n = 0;

  // Objective block.
  std::string objective_kind;  // modular | coverage | facility
  std::vector<double> weights;
  int item_count = 0;
  std::vector<std::vector<int>> covers;
  std::vector<double> item_weights;
  std::vector<std::vector<double>> utility;

  // Constraint block.
  std::string constraint_kind;  // uniform | partition
  int rank = 0;
  std::vector<std::vector<int>> blocks;
  std::vector<int> caps;

  // Noise block.
  std::string noise_family = "none";  // none | exponential | uniform-band |
                                      // truncated-gaussian | two-point
  double halfwidth = 0.0;
  double sigma = 0.0;
  double high = 0.0;
  double p_high = 0.0;
  bool normalize_mean = true;

  std::uint64_t seed = 0;
  int special_element = -1;  // adversary instances record e-star here

  static InstanceSpec from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  Objective build_objective() const;
  ConstraintOracle build_constraint() const;
  NoiseDistribution build_noise() const;
};

InstanceSpec load_instance(const std::string& path);
void save_instance(const InstanceSpec& spec, const std::string& path);

/// Random weighted-coverage instance under a uniform constraint; every
/// element covers each item independently with the given density, item
/// weights uniform in [0.5, 1.5].
InstanceSpec generate_random_coverage(int n, int items, double density, int r,
                                      std::uint64_t seed);

/// Random facility-location instance under a uniform constraint; client by
/// element utilities uniform in [0, 1].
InstanceSpec generate_random_facility(int n, int clients, int r,
                                      std::uint64_t seed);

/// Partition-matroid instance that defeats the bundle-greedy baseline:
/// r-1 singleton blocks of value zero, one large block holding a single
/// element of value m among unit-value elements, all caps one, and an
/// unnormalized two-point noise returning m with probability 1/(2(n-r)).
/// The valuable element lands at a seed-random position in the large block.
InstanceSpec generate_adversary(int n, int r, double m, std::uint64_t seed);

/// Exact constrained maximizer. Modular objectives use the matroid greedy;
/// everything else searches the independent sets depth-first with a
/// submodular upper bound, refusing after 2^26 visited nodes.
std::pair<Subset, double> brute_force_opt(const Objective& objective,
                                          const ConstraintOracle& constraint);

}  // namespace noisyls

#endif  // NOISYLS_INSTANCE_HPP_
