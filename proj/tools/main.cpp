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

#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "noisyls/instance.hpp"
#include "noisyls/selfcheck.hpp"
#include "noisyls/solvers.hpp"
#include "noisyls/trials.hpp"

namespace {

using noisyls::InstanceSpec;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kAcceptanceFailure = 1;
constexpr int kConfigError = 2;

struct CommonFlags {
  std::uint64_t seed = 1;
  double epsilon = 0.2;
  std::string regime = "auto";
  double sample_multiplier = 1.0;
  bool strict_paper = false;
  std::string out;
};

void add_common(CLI::App* cmd, CommonFlags* flags) {
  cmd->add_option("--seed", flags->seed, "trial seed");
  cmd->add_option("--epsilon", flags->epsilon, "precision parameter");
  cmd->add_option("--algorithm,--regime", flags->regime,
                  "auto | card-small | card-large | matroid-small | "
                  "matroid-large | sbo | greedy | bundle-greedy");
  cmd->add_option("--sample-multiplier", flags->sample_multiplier,
                  "scales the estimator sample counts");
  cmd->add_flag("--strict-paper", flags->strict_paper,
                "run every local-search iteration, no early exit");
  cmd->add_option("--out", flags->out, "output path (default stdout)");
}

std::ostream& open_out(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot open output file: " + path);
  return file;
}

int cmd_solve(const std::string& instance_path, const CommonFlags& flags) {
  const InstanceSpec spec = noisyls::load_instance(instance_path);
  const noisyls::Objective objective = spec.build_objective();
  const noisyls::ConstraintOracle constraint = spec.build_constraint();
  noisyls::NoisyOracle oracle(objective, spec.build_noise(),
                              noisyls::noise_seed_for(flags.seed));
  noisyls::SolverOptions opts;
  opts.seed = noisyls::algo_seed_for(flags.seed);
  opts.sample_multiplier = flags.sample_multiplier;
  opts.strict_paper = flags.strict_paper;
  const noisyls::SolverReport report =
      noisyls::solve(oracle, constraint, flags.epsilon, flags.regime, opts);

  json j{{"algorithm", report.algorithm},
         {"chosen", report.chosen.ids()},
         {"f_value", report.true_value},
         {"feasible", constraint.is_independent(report.chosen)},
         {"noisy_queries", report.noisy_queries},
         {"epsilon", report.epsilon},
         {"alpha", report.alpha},
         {"step", report.step},
         {"delta", report.delta},
         {"sample_count", report.sample_count},
         {"iteration_cap", report.iterations},
         {"wall_seconds", report.wall_seconds}};
  std::ofstream file;
  open_out(flags.out, file) << j.dump(2) << '\n';
  return constraint.is_independent(report.chosen) ? kOk : kAcceptanceFailure;
}

InstanceSpec build_from_generator(const json& gen, std::uint64_t seed) {
  const std::string kind = gen.at("kind").get<std::string>();
  if (kind == "random_coverage") {
    return noisyls::generate_random_coverage(
        gen.at("n").get<int>(), gen.at("items").get<int>(),
        gen.at("density").get<double>(), gen.at("r").get<int>(), seed);
  }
  if (kind == "random_facility") {
    return noisyls::generate_random_facility(gen.at("n").get<int>(),
                                             gen.at("clients").get<int>(),
                                             gen.at("r").get<int>(), seed);
  }
  if (kind == "appendixA_adversary" || kind == "adversary") {
    return noisyls::generate_adversary(gen.at("n").get<int>(),
                                       gen.at("r").get<int>(),
                                       gen.at("m").get<double>(), seed);
  }
  throw std::runtime_error("unknown generator kind: " + kind);
}

int cmd_experiment(const std::string& config_path, const CommonFlags& flags) {
  std::ifstream in(config_path);
  if (!in) throw std::runtime_error("cannot open config file: " + config_path);
  json cfg_json;
  in >> cfg_json;

  noisyls::TrialConfig cfg;
  if (cfg_json.contains("generator")) {
    const json gen = cfg_json.at("generator");
    json noise = cfg_json.value("noise", json{{"family", "none"}});
    cfg.make_instance = [gen, noise](std::uint64_t seed) {
      InstanceSpec spec = build_from_generator(gen, seed);
      spec.noise_family = noise.at("family").get<std::string>();
      spec.halfwidth = noise.value("halfwidth", 0.0);
      spec.sigma = noise.value("sigma", 0.0);
      spec.high = noise.value("high", 0.0);
      spec.p_high = noise.value("p_high", 0.0);
      spec.normalize_mean = noise.value("normalize_mean", true);
      return spec;
    };
  } else if (cfg_json.contains("instance")) {
    const InstanceSpec fixed =
        noisyls::load_instance(cfg_json.at("instance").get<std::string>());
    cfg.make_instance = [fixed](std::uint64_t) { return fixed; };
  } else {
    throw std::runtime_error("config needs a generator or instance entry");
  }
  if (cfg_json.contains("seeds")) {
    cfg.seeds = cfg_json.at("seeds").get<std::vector<std::uint64_t>>();
  } else {
    const long long count = cfg_json.value("seed_count", 0);
    const std::uint64_t start = cfg_json.value("seed_start", std::uint64_t{1});
    for (long long i = 0; i < count; ++i) cfg.seeds.push_back(start + i);
  }
  cfg.algorithms = cfg_json.at("algorithms").get<std::vector<std::string>>();
  cfg.epsilon = cfg_json.value("epsilon", flags.epsilon);
  cfg.compute_opt = cfg_json.value("compute_opt", true);
  cfg.options.sample_multiplier =
      cfg_json.value("sample_multiplier", flags.sample_multiplier);
  cfg.options.strict_paper = cfg_json.value("strict_paper", flags.strict_paper);
  cfg.options.bundle_size = cfg_json.value("bundle_size", 3);

  const std::vector<noisyls::ResultRow> rows = noisyls::run_trials(cfg);
  std::ofstream file;
  noisyls::write_csv(rows, open_out(flags.out, file));
  return kOk;
}

int cmd_verify() {
  return noisyls::run_selfcheck(std::cout) ? kOk : kAcceptanceFailure;
}

int cmd_demo(int trials, int n, int r, double m, int bundle_size,
             double threshold, const CommonFlags& flags) {
  int misses = 0;
  double miss_ratio_total = 0.0;
  double bundle_ratio_total = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    const std::uint64_t seed = flags.seed + trial;
    const InstanceSpec spec = noisyls::generate_adversary(n, r, m, seed);
    const noisyls::Objective objective = spec.build_objective();
    const noisyls::ConstraintOracle constraint = spec.build_constraint();
    noisyls::NoisyOracle oracle(objective, spec.build_noise(),
                                noisyls::noise_seed_for(seed));
    noisyls::SolverOptions opts;
    opts.seed = noisyls::algo_seed_for(seed);
    opts.bundle_size = bundle_size;
    opts.adversarial_ties = true;
    const noisyls::SolverReport report =
        noisyls::baseline_bundle_greedy(oracle, constraint, opts);
    const double ratio = report.true_value / m;
    bundle_ratio_total += ratio;
    if (!report.chosen.contains(spec.special_element)) {
      ++misses;
      miss_ratio_total += ratio;
    }
  }
  const double frequency = static_cast<double>(misses) / trials;
  std::cout << "trials=" << trials << " miss_frequency=" << frequency
            << " mean_ratio=" << bundle_ratio_total / trials
            << " mean_ratio_on_misses="
            << (misses ? miss_ratio_total / misses : 0.0) << '\n';
  return frequency >= threshold ? kOk : kAcceptanceFailure;
}

int cmd_gen(const std::string& kind, int n, int items, double density, int r,
            double m, const CommonFlags& flags) {
  InstanceSpec spec;
  if (kind == "random_coverage") {
    spec = noisyls::generate_random_coverage(n, items, density, r, flags.seed);
  } else if (kind == "random_facility") {
    spec = noisyls::generate_random_facility(n, items, r, flags.seed);
  } else if (kind == "appendixA_adversary" || kind == "adversary") {
    spec = noisyls::generate_adversary(n, r, m, flags.seed);
  } else {
    throw std::runtime_error("unknown generator kind: " + kind);
  }
  std::ofstream file;
  open_out(flags.out, file) << spec.to_json().dump(2) << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Constrained monotone submodular maximization under a consistent "
      "multiplicative noisy value oracle"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string instance_path;
  std::string config_path;
  int trials = 400, demo_n = 300, demo_r = 4, bundle_size = 3;
  double demo_m = 10.0, threshold = 0.25;
  std::string gen_kind = "random_coverage";
  int gen_n = 60, gen_items = 120, gen_r = 8;
  double gen_density = 0.05, gen_m = 10.0;

  CLI::App* solve = app.add_subcommand("solve", "solve one instance file");
  solve->add_option("--instance", instance_path, "instance JSON file")
      ->required();
  add_common(solve, &flags);

  CLI::App* experiment =
      app.add_subcommand("experiment", "run seeded trials into a CSV");
  experiment->add_option("--config", config_path, "trial config JSON file")
      ->required();
  add_common(experiment, &flags);

  app.add_subcommand("verify", "run the desk-scale property checks");

  CLI::App* demo = app.add_subcommand(
      "demo-counterexample",
      "show the bundle-greedy baseline missing the valuable element");
  demo->add_option("--trials", trials, "number of trials");
  demo->add_option("--n", demo_n, "ground-set size");
  demo->add_option("--r", demo_r, "matroid rank");
  demo->add_option("--m", demo_m, "value of the special element");
  demo->add_option("--bundle-size", bundle_size, "bundle size");
  demo->add_option("--threshold", threshold, "required miss frequency");
  add_common(demo, &flags);

  CLI::App* gen = app.add_subcommand("gen", "generate an instance file");
  gen->add_option("--kind", gen_kind,
                  "random_coverage | random_facility | appendixA_adversary");
  gen->add_option("--n", gen_n, "ground-set size");
  gen->add_option("--items", gen_items, "coverage items / facility clients");
  gen->add_option("--density", gen_density, "coverage density");
  gen->add_option("--r", gen_r, "constraint rank");
  gen->add_option("--m", gen_m, "adversary special value");
  add_common(gen, &flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_name() == "CallForHelp" ? kOk : kConfigError;
  }

  try {
    if (solve->parsed()) return cmd_solve(instance_path, flags);
    if (experiment->parsed()) return cmd_experiment(config_path, flags);
    if (app.get_subcommand("verify")->parsed()) return cmd_verify();
    if (demo->parsed()) {
      return cmd_demo(trials, demo_n, demo_r, demo_m, bundle_size, threshold,
                      flags);
    }
    if (gen->parsed()) {
      return cmd_gen(gen_kind, gen_n, gen_items, gen_density, gen_r, gen_m,
                     flags);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfigError;
  }
  return kConfigError;
}
