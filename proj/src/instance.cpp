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

#include "noisyls/instance.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "noisyls/rng.hpp"

namespace noisyls {

using nlohmann::json;

InstanceSpec InstanceSpec::from_json(const json& j) {
  InstanceSpec spec;
  spec.name = j.value("name", "");
  spec.n = j.at("n").get<int>();
  spec.seed = j.value("seed", std::uint64_t{0});
  spec.special_element = j.value("special_element", -1);

  const json& obj = j.at("objective");
  spec.objective_kind = obj.at("kind").get<std::string>();
  if (spec.objective_kind == "modular") {
    spec.weights = obj.at("weights").get<std::vector<double>>();
  } else if (spec.objective_kind == "coverage") {
    spec.item_count = obj.at("item_count").get<int>();
    spec.covers = obj.at("covers").get<std::vector<std::vector<int>>>();
    spec.item_weights = obj.at("item_weights").get<std::vector<double>>();
  } else if (spec.objective_kind == "facility") {
    spec.utility = obj.at("utility").get<std::vector<std::vector<double>>>();
  } else {
    throw std::invalid_argument("unknown objective kind: " + spec.objective_kind);
  }

  const json& con = j.at("constraint");
  spec.constraint_kind = con.at("kind").get<std::string>();
  if (spec.constraint_kind == "uniform") {
    spec.rank = con.at("rank").get<int>();
  } else if (spec.constraint_kind == "partition") {
    spec.blocks = con.at("blocks").get<std::vector<std::vector<int>>>();
    spec.caps = con.at("caps").get<std::vector<int>>();
  } else {
    throw std::invalid_argument("unknown constraint kind: " +
                                spec.constraint_kind);
  }

  const json& noise = j.at("noise");
  spec.noise_family = noise.at("family").get<std::string>();
  spec.halfwidth = noise.value("halfwidth", 0.0);
  spec.sigma = noise.value("sigma", 0.0);
  spec.high = noise.value("high", 0.0);
  spec.p_high = noise.value("p_high", 0.0);
  spec.normalize_mean = noise.value("normalize_mean", true);
  return spec;
}

json InstanceSpec::to_json() const {
  json obj{{"kind", objective_kind}};
  if (objective_kind == "modular") {
    obj["weights"] = weights;
  } else if (objective_kind == "coverage") {
    obj["item_count"] = item_count;
    obj["covers"] = covers;
    obj["item_weights"] = item_weights;
  } else {
    obj["utility"] = utility;
  }
  json con{{"kind", constraint_kind}};
  if (constraint_kind == "uniform") {
    con["rank"] = rank;
  } else {
    con["blocks"] = blocks;
    con["caps"] = caps;
  }
  json noise{{"family", noise_family}};
  if (noise_family == "uniform-band") noise["halfwidth"] = halfwidth;
  if (noise_family == "truncated-gaussian") noise["sigma"] = sigma;
  if (noise_family == "two-point") {
    noise["high"] = high;
    noise["p_high"] = p_high;
    noise["normalize_mean"] = normalize_mean;
  }
  return json{{"name", name},
              {"n", n},
              {"seed", seed},
              {"special_element", special_element},
              {"objective", obj},
              {"constraint", con},
              {"noise", noise}};
}

Objective InstanceSpec::build_objective() const {
  if (objective_kind == "modular") return Objective::modular(weights);
  if (objective_kind == "coverage") {
    return Objective::coverage(n, item_count, covers, item_weights);
  }
  return Objective::facility(utility);
}

ConstraintOracle InstanceSpec::build_constraint() const {
  if (constraint_kind == "uniform") return ConstraintOracle::uniform(n, rank);
  return ConstraintOracle::partition(n, blocks, caps);
}

NoiseDistribution InstanceSpec::build_noise() const {
  if (noise_family == "none") return NoiseDistribution::no_noise();
  if (noise_family == "exponential") return NoiseDistribution::exponential();
  if (noise_family == "uniform-band") {
    return NoiseDistribution::uniform_band(halfwidth);
  }
  if (noise_family == "truncated-gaussian") {
    return NoiseDistribution::truncated_gaussian(sigma);
  }
  if (noise_family == "two-point") {
    return NoiseDistribution::two_point(high, p_high, normalize_mean);
  }
  throw std::invalid_argument("unknown noise family: " + noise_family);
}

InstanceSpec load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file: " + path);
  json j;
  in >> j;
  return InstanceSpec::from_json(j);
}

void save_instance(const InstanceSpec& spec, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write instance file: " + path);
  out << spec.to_json().dump(2) << '\n';
}

InstanceSpec generate_random_coverage(int n, int items, double density, int r,
                                      std::uint64_t seed) {
  if (n < 1 || items < 1 || !(density > 0.0 && density <= 1.0)) {
    throw std::invalid_argument("generate_random_coverage: bad parameters");
  }
  Rng rng(seed, 0x636f76ULL);
  InstanceSpec spec;
  spec.name = "random_coverage";
  spec.n = n;
  spec.seed = seed;
  spec.objective_kind = "coverage";
  spec.item_count = items;
  spec.covers.resize(n);
  for (int e = 0; e < n; ++e) {
    // Heavy-tailed per-element cover probability (mean factor 1): a few
    // elements cover much more than the rest, so good and bad feasible sets
    // stay clearly separated even at small n.
    const double u = rng.next_unit();
    const double u4 = u * u * u * u;
    const double p = std::min(1.0, density * (0.25 + 6.0 * u4 * u4));
    for (int item = 0; item < items; ++item) {
      if (rng.next_unit() < p) spec.covers[e].push_back(item);
    }
  }
  spec.item_weights.resize(items);
  for (int item = 0; item < items; ++item) {
    spec.item_weights[item] = 0.5 + rng.next_unit();
  }
  spec.constraint_kind = "uniform";
  spec.rank = r;
  return spec;
}

InstanceSpec generate_random_facility(int n, int clients, int r,
                                      std::uint64_t seed) {
  if (n < 1 || clients < 1) {
    throw std::invalid_argument("generate_random_facility: bad parameters");
  }
  Rng rng(seed, 0x666163ULL);
  InstanceSpec spec;
  spec.name = "random_facility";
  spec.n = n;
  spec.seed = seed;
  spec.objective_kind = "facility";
  spec.utility.assign(clients, std::vector<double>(n));
  for (auto& row : spec.utility) {
    for (double& u : row) u = rng.next_unit();
  }
  spec.constraint_kind = "uniform";
  spec.rank = r;
  return spec;
}

InstanceSpec generate_adversary(int n, int r, double m, std::uint64_t seed) {
  if (r < 2 || n <= r + 1 || !(m > 1.0)) {
    throw std::invalid_argument("generate_adversary: bad parameters");
  }
  Rng rng(seed, 0x616476ULL);
  InstanceSpec spec;
  spec.name = "adversary";
  spec.n = n;
  spec.seed = seed;
  spec.objective_kind = "modular";
  spec.weights.assign(n, 0.0);
  // Elements 0..r-2 form the zero-value singleton blocks; the rest is one
  // big block of unit values with a single element worth m.
  for (int e = r - 1; e < n; ++e) spec.weights[e] = 1.0;
  spec.special_element = r - 1 + rng.uniform_int(n - r + 1);
  spec.weights[spec.special_element] = m;

  spec.constraint_kind = "partition";
  spec.blocks.resize(r);
  spec.caps.assign(r, 1);
  for (int i = 0; i < r - 1; ++i) spec.blocks[i] = {i};
  for (int e = r - 1; e < n; ++e) spec.blocks[r - 1].push_back(e);

  spec.noise_family = "two-point";
  spec.high = m;
  spec.p_high = 1.0 / (2.0 * (n - r));
  spec.normalize_mean = false;
  return spec;
}

namespace {

struct SearchState {
  const Objective* objective;
  const ConstraintOracle* constraint;
  int n;
  int rank;
  long long visited = 0;
  Subset best;
  double best_value = -1.0;
};

void opt_dfs(SearchState& state, const Subset& current, double current_value,
             int next) {
  if (++state.visited > (1LL << 26)) {
    throw std::runtime_error("brute_force_opt: search budget exceeded");
  }
  if (current_value > state.best_value) {
    state.best_value = current_value;
    state.best = current;
  }
  const int remaining_slots = state.rank - current.size();
  if (remaining_slots <= 0) return;
  std::vector<std::pair<double, int>> gains;
  for (int e = next; e < state.n; ++e) {
    if (!state.constraint->is_independent(current.plus(e))) continue;
    gains.emplace_back(state.objective->evaluate(current.plus(e)) - current_value,
                       e);
  }
  if (gains.empty()) return;
  // Submodular upper bound: the top remaining marginals cap any completion.
  std::vector<double> sorted;
  sorted.reserve(gains.size());
  for (const auto& g : gains) sorted.push_back(g.first);
  std::sort(sorted.rbegin(), sorted.rend());
  double bound = current_value;
  for (int i = 0; i < remaining_slots && i < static_cast<int>(sorted.size());
       ++i) {
    bound += sorted[i];
  }
  if (bound <= state.best_value + 1e-12) return;
  for (const auto& [gain, e] : gains) {
    opt_dfs(state, current.plus(e), current_value + gain, e + 1);
  }
}

Subset matroid_greedy_modular(const Objective& objective,
                              const ConstraintOracle& constraint, int n) {
  std::vector<std::pair<double, int>> order;
  for (int e = 0; e < n; ++e) {
    order.emplace_back(objective.evaluate(Subset({e})), e);
  }
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  Subset chosen;
  for (const auto& [w, e] : order) {
    if (w <= 0.0) break;
    const Subset candidate = chosen.plus(e);
    if (constraint.is_independent(candidate)) chosen = candidate;
  }
  return chosen;
}

}  // namespace

std::pair<Subset, double> brute_force_opt(const Objective& objective,
                                          const ConstraintOracle& constraint) {
  const int n = objective.ground_size();
  if (objective.kind() == Objective::Kind::kModular) {
    const Subset chosen = matroid_greedy_modular(objective, constraint, n);
    return {chosen, objective.evaluate(chosen)};
  }
  SearchState state;
  state.objective = &objective;
  state.constraint = &constraint;
  state.n = n;
  state.rank = constraint.rank();
  opt_dfs(state, Subset(), 0.0, 0);
  return {state.best, state.best_value};
}

}  // namespace noisyls
