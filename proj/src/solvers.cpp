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

#include "noisyls/solvers.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "noisyls/estimator.hpp"
#include "noisyls/surrogate.hpp"

namespace noisyls {
namespace {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

long long samples_small(int n, int r, const SolverOptions& opts) {
  if (opts.sample_count_override > 0) return opts.sample_count_override;
  const double base = std::log(static_cast<double>(r)) * std::sqrt(n) *
                      std::max(static_cast<double>(r), std::log(n));
  return std::max(1LL, static_cast<long long>(
                           std::ceil(base * opts.sample_multiplier)));
}

long long samples_large(int n, int r, double epsilon, const CoefficientTable& table,
                        const SolverOptions& opts) {
  if (opts.sample_count_override > 0) return opts.sample_count_override;
  const double hr = table.harmonic(r);
  const double base =
      32.0 * r * hr * hr * std::pow(std::log(n), 2.5) / epsilon;
  return std::max(1LL, static_cast<long long>(
                           std::ceil(base * opts.sample_multiplier)));
}

double noisy_f0(NoisyOracle& oracle, const Subset& s) {
  return f0([&](const Subset& t) { return oracle.noisy_value(t); }, s);
}

/// Adds argmax_e noisy(S + e) over the given candidates; smallest id wins
/// ties. Returns the chosen element, or -1 when no candidate exists.
int noisy_max_addition(NoisyOracle& oracle, const Subset& s,
                       const std::vector<int>& candidates) {
  int best = -1;
  double best_value = 0.0;
  for (int e : candidates) {
    const double value = oracle.noisy_value(s.plus(e));
    if (best < 0 || value > best_value) {
      best = e;
      best_value = value;
    }
  }
  return best;
}

ApproxOracle make_phi_h_oracle(NoisyOracle& oracle, const CoefficientTable& table,
                               const EstimatorConfig& cfg, std::uint64_t seed) {
  ApproxOracle approx;
  approx.alpha = cfg.alpha;
  approx.delta = cfg.delta;
  approx.evaluate = [&oracle, &table, cfg, seed](const Subset& s,
                                                 std::uint64_t call) {
    Rng rng(seed, call);
    return estimate_phi_h(oracle, s, table, cfg, rng);
  };
  return approx;
}

ApproxOracle make_phi_hH_oracle(NoisyOracle& oracle,
                                const CoefficientTable& table, Subset h_set,
                                const EstimatorConfig& cfg, std::uint64_t seed) {
  ApproxOracle approx;
  approx.alpha = cfg.alpha;
  approx.delta = cfg.delta;
  approx.evaluate = [&oracle, &table, h_set = std::move(h_set), cfg, seed](
                        const Subset& s, std::uint64_t call) {
    Rng rng(seed, call);
    return estimate_phi_hH(oracle, s, h_set, table, cfg, rng);
  };
  return approx;
}

void finish_report(SolverReport& report, NoisyOracle& oracle,
                   long long queries_before, const Stopwatch& watch) {
  report.true_value = oracle.objective().evaluate(report.chosen);
  report.noisy_queries = oracle.query_count() - queries_before;
  report.wall_seconds = watch.seconds();
}

}  // namespace

SolverReport solve_cardinality_small(NoisyOracle& oracle, int r, double epsilon,
                                     const SolverOptions& opts) {
  const Stopwatch watch;
  const int n = oracle.objective().ground_size();
  if (r < 2 || r > n) {
    throw std::invalid_argument("solve_cardinality_small: need 2 <= r <= n");
  }
  const long long before = oracle.query_count();
  CoefficientTable table;

  SolverReport report;
  report.algorithm = "card-small";
  report.epsilon = epsilon;
  report.alpha = report.step =
      epsilon / (4.0 * r * std::log(static_cast<double>(r)));
  report.iterations = iteration_cap(report.alpha, report.step, r - 1);
  report.delta = 1.0 / ((report.iterations + 1) * static_cast<double>(r - 1) *
                        n * static_cast<double>(n));
  report.sample_count = samples_small(n, r, opts);

  EstimatorConfig cfg{report.sample_count, report.alpha, report.delta};
  const ApproxOracle approx =
      make_phi_h_oracle(oracle, table, cfg, mix64(opts.seed ^ 0x43415253ULL));
  const ConstraintOracle inner = ConstraintOracle::uniform(n, r - 1);
  NLSConfig nls_cfg{report.step, report.iterations, opts.strict_paper};
  auto [s_l, trace] = nls(approx, inner, nls_cfg);
  report.traces.push_back(std::move(trace));

  std::vector<int> candidates;
  for (int e = 0; e < n; ++e) {
    if (!s_l.contains(e)) candidates.push_back(e);
  }
  const int added = noisy_max_addition(oracle, s_l, candidates);
  report.chosen = added >= 0 ? s_l.plus(added) : s_l;
  finish_report(report, oracle, before, watch);
  return report;
}

SolverReport solve_cardinality_large(NoisyOracle& oracle, int r, double epsilon,
                                     const SolverOptions& opts) {
  const Stopwatch watch;
  const int n = oracle.objective().ground_size();
  const int h_size = opts.h_size_override >= 0
                         ? opts.h_size_override
                         : static_cast<int>(std::ceil(3.0 * std::log(n)));
  if (r <= h_size || r > n) {
    throw std::invalid_argument(
        "solve_cardinality_large: rank must exceed the pinned-set size; use "
        "the small-rank solver for such ranks");
  }
  const long long before = oracle.query_count();
  CoefficientTable table;

  std::vector<int> h_ids(h_size);
  for (int i = 0; i < h_size; ++i) h_ids[i] = i;
  const Subset h_set(h_ids);

  SolverReport report;
  report.algorithm = "card-large";
  report.epsilon = epsilon;
  report.h_size = h_size;
  report.alpha = report.step =
      epsilon / (4.0 * r * std::log(static_cast<double>(r)));
  report.iterations = iteration_cap(report.alpha, report.step, r - h_size);
  report.delta = 3.0 / std::pow(static_cast<double>(n), 6);
  report.sample_count = samples_large(n, r, epsilon, table, opts);

  EstimatorConfig cfg{report.sample_count, report.alpha, report.delta};
  const ApproxOracle approx = make_phi_hH_oracle(
      oracle, table, h_set, cfg, mix64(opts.seed ^ 0x4341524cULL));
  const ConstraintOracle inner =
      ConstraintOracle::contraction(ConstraintOracle::uniform(n, r), h_set);
  NLSConfig nls_cfg{report.step, report.iterations, opts.strict_paper};
  auto [s_l, trace] = nls(approx, inner, nls_cfg);
  report.traces.push_back(std::move(trace));

  report.chosen = s_l.unite(h_set);
  finish_report(report, oracle, before, watch);
  return report;
}

SolverReport solve_matroid_small(NoisyOracle& oracle,
                                 const ConstraintOracle& constraint,
                                 double epsilon, const SolverOptions& opts) {
  const Stopwatch watch;
  const int n = oracle.objective().ground_size();
  const int r = constraint.rank();
  if (r < 3) {
    throw std::invalid_argument("solve_matroid_small: rank must be at least 3");
  }
  const long long before = oracle.query_count();
  CoefficientTable table;

  SolverReport report;
  report.algorithm = "matroid-small";
  report.epsilon = epsilon;
  report.alpha = report.step =
      epsilon / (4.0 * r * std::log(static_cast<double>(r)));
  report.iterations = iteration_cap(report.alpha, report.step, r - 1);
  report.delta = 1.0 / ((report.iterations + 1) * static_cast<double>(r - 1) *
                        n * static_cast<double>(n));
  report.sample_count = samples_small(n, r, opts);

  EstimatorConfig cfg{report.sample_count, report.alpha, report.delta};
  const ApproxOracle approx =
      make_phi_h_oracle(oracle, table, cfg, mix64(opts.seed ^ 0x4d415453ULL));
  const ConstraintOracle inner = ConstraintOracle::truncation(constraint, r - 1);
  NLSConfig nls_cfg{report.step, report.iterations, opts.strict_paper};
  auto [s_l, trace] = nls(approx, inner, nls_cfg);
  report.traces.push_back(std::move(trace));

  // The added element ignores feasibility on purpose; the comparison phase
  // below restores it.
  std::vector<int> candidates;
  for (int e = 0; e < n; ++e) {
    if (!s_l.contains(e)) candidates.push_back(e);
  }
  const int added = noisy_max_addition(oracle, s_l, candidates);
  const Subset s_m = added >= 0 ? s_l.plus(added) : s_l;
  if (noisy_f0(oracle, s_l) >= 0.5 * noisy_f0(oracle, s_m)) {
    report.chosen = s_l;
  } else {
    report.chosen = s_m.difference(s_l);
  }
  finish_report(report, oracle, before, watch);
  return report;
}

namespace {

/// Shared by the large-rank matroid and SBO solvers: run the pinned local
/// search for each part and keep the candidate with the largest noisy
/// deletion-average, earlier part winning ties.
SolverReport best_pinned_candidate(NoisyOracle& oracle,
                                   const ConstraintOracle& constraint,
                                   double epsilon,
                                   const std::vector<Subset>& parts,
                                   const SolverOptions& opts,
                                   std::uint64_t tag, SolverReport report) {
  const int n = oracle.objective().ground_size();
  const int r = constraint.rank();
  CoefficientTable table;

  report.epsilon = epsilon;
  report.alpha = report.step =
      epsilon / (4.0 * r * std::log(static_cast<double>(r)));
  report.delta = 3.0 / std::pow(static_cast<double>(n), 6);
  report.sample_count = samples_large(n, r, epsilon, table, opts);

  Subset best;
  double best_score = 0.0;
  bool have_best = false;
  for (std::size_t part = 0; part < parts.size(); ++part) {
    const Subset& h_set = parts[part];
    const ConstraintOracle inner =
        ConstraintOracle::contraction(constraint, h_set);
    const long long cap =
        iteration_cap(report.alpha, report.step, inner.rank());
    report.iterations = std::max(report.iterations, cap);
    EstimatorConfig cfg{report.sample_count, report.alpha, report.delta};
    const ApproxOracle approx = make_phi_hH_oracle(
        oracle, table, h_set, cfg, mix64(opts.seed ^ tag ^ (part * 0x9e37ULL)));
    NLSConfig nls_cfg{report.step, cap, opts.strict_paper};
    auto [s_t, trace] = nls(approx, inner, nls_cfg);
    report.traces.push_back(std::move(trace));
    const Subset candidate = s_t.unite(h_set);
    const double score = noisy_f0(oracle, candidate);
    if (!have_best || score > best_score) {
      have_best = true;
      best = candidate;
      best_score = score;
    }
  }
  report.chosen = best;
  return report;
}

}  // namespace

SolverReport solve_matroid_large(NoisyOracle& oracle,
                                 const ConstraintOracle& constraint,
                                 double epsilon, const SolverOptions& opts) {
  const Stopwatch watch;
  const int r = constraint.rank();
  if (r < 4) {
    throw std::invalid_argument("solve_matroid_large: rank must be at least 4");
  }
  const long long before = oracle.query_count();
  const Subset base = constraint.extend_to_base(Subset());
  const int half = r / 2;
  std::vector<int> first(base.ids().begin(), base.ids().begin() + half);
  std::vector<int> second(base.ids().begin() + half, base.ids().end());
  SolverReport report;
  report.algorithm = "matroid-large";
  report.h_size = half;
  report = best_pinned_candidate(oracle, constraint, epsilon,
                                 {Subset(first), Subset(second)}, opts,
                                 0x4d41544cULL, std::move(report));
  finish_report(report, oracle, before, watch);
  return report;
}

SolverReport solve_sbo(NoisyOracle& oracle, const ConstraintOracle& constraint,
                       double epsilon, const SolverOptions& opts) {
  const Stopwatch watch;
  if (constraint.kind() != ConstraintOracle::Kind::kPartition) {
    throw std::invalid_argument("solve_sbo: partition constraint required");
  }
  const int n = oracle.objective().ground_size();
  const int r = constraint.rank();
  const int part_size = opts.part_size_override >= 1
                            ? opts.part_size_override
                            : static_cast<int>(std::ceil(3.0 * std::log(n)));
  const int part_count = r / part_size;
  if (part_count < 2) {
    throw std::invalid_argument(
        "solve_sbo: rank must cover at least two parts; lower the part size "
        "or use another solver");
  }
  const long long before = oracle.query_count();
  const Subset base = constraint.extend_to_base(Subset());

  // Consecutive runs of the base, as even as possible, earlier parts larger.
  std::vector<Subset> parts;
  int offset = 0;
  for (int t = 0; t < part_count; ++t) {
    const int size = r / part_count + (t < r % part_count ? 1 : 0);
    parts.emplace_back(std::vector<int>(base.ids().begin() + offset,
                                        base.ids().begin() + offset + size));
    offset += size;
  }
  SolverReport report;
  report.algorithm = "sbo";
  report.h_size = parts.front().size();
  report = best_pinned_candidate(oracle, constraint, epsilon, parts, opts,
                                 0x53424f31ULL, std::move(report));
  finish_report(report, oracle, before, watch);
  return report;
}

SolverReport baseline_greedy_noisy(NoisyOracle& oracle,
                                   const ConstraintOracle& constraint,
                                   const SolverOptions& opts) {
  (void)opts;
  const Stopwatch watch;
  const int n = oracle.objective().ground_size();
  const long long before = oracle.query_count();
  SolverReport report;
  report.algorithm = "greedy";
  Subset current;
  for (;;) {
    std::vector<int> candidates;
    for (int e = 0; e < n; ++e) {
      if (!current.contains(e) && constraint.is_independent(current.plus(e))) {
        candidates.push_back(e);
      }
    }
    if (candidates.empty()) break;
    current = current.plus(noisy_max_addition(oracle, current, candidates));
  }
  report.chosen = current;
  finish_report(report, oracle, before, watch);
  return report;
}

namespace {

void feasible_bundles(const ConstraintOracle& constraint, const Subset& current,
                      const std::vector<int>& candidates, int size,
                      std::size_t from, std::vector<int>& partial,
                      std::vector<Subset>& out) {
  if (static_cast<int>(partial.size()) == size) {
    out.emplace_back(partial);
    return;
  }
  for (std::size_t i = from; i < candidates.size(); ++i) {
    partial.push_back(candidates[i]);
    Subset with = current;
    bool ok = true;
    for (int e : partial) {
      if (with.contains(e)) {
        ok = false;
        break;
      }
      with = with.plus(e);
    }
    if (ok && constraint.is_independent(with)) {
      feasible_bundles(constraint, current, candidates, size, i + 1, partial,
                       out);
    }
    partial.pop_back();
  }
}

std::vector<Subset> ball_members(const ConstraintOracle& constraint,
                                 const Subset& current, const Subset& bundle,
                                 int n) {
  std::vector<Subset> out;
  const Subset excluded = current.unite(bundle);
  for (int removed : bundle.ids()) {
    const Subset shrunk = bundle.minus(removed);
    for (int added = 0; added < n; ++added) {
      if (excluded.contains(added)) continue;
      const Subset swapped = shrunk.plus(added);
      if (constraint.is_independent(current.unite(swapped))) {
        out.push_back(swapped);
      }
    }
  }
  return out;
}

}  // namespace

SolverReport baseline_bundle_greedy(NoisyOracle& oracle,
                                    const ConstraintOracle& constraint,
                                    const SolverOptions& opts) {
  if (opts.bundle_size < 1) {
    throw std::invalid_argument("baseline_bundle_greedy: bundle size < 1");
  }
  const Stopwatch watch;
  const int n = oracle.objective().ground_size();
  const long long before = oracle.query_count();
  Rng rng(opts.seed, 0x42414c4cULL);
  SolverReport report;
  report.algorithm = "bundle-greedy";

  Subset current;
  for (;;) {
    std::vector<int> candidates;
    for (int e = 0; e < n; ++e) {
      if (!current.contains(e) && constraint.is_independent(current.plus(e))) {
        candidates.push_back(e);
      }
    }
    if (candidates.empty()) break;

    // Largest bundle size with at least one feasible bundle, capped at the
    // configured size; the final rounds fall back to smaller bundles.
    std::vector<Subset> bundles;
    for (int size = std::min<int>(opts.bundle_size, candidates.size());
         size >= 1 && bundles.empty(); --size) {
      std::vector<int> partial;
      feasible_bundles(constraint, current, candidates, size, 0, partial,
                       bundles);
    }
    if (bundles.empty()) break;

    Subset best_bundle;
    double best_mean = 0.0;
    bool have_bundle = false;
    for (const Subset& bundle : bundles) {
      std::vector<Subset> ball = ball_members(constraint, current, bundle, n);
      if (ball.empty()) ball.push_back(bundle);
      double total = 0.0;
      long long used = 0;
      if (static_cast<long long>(ball.size()) <= opts.ball_sample_cap) {
        for (const Subset& member : ball) {
          total += oracle.noisy_value(current.unite(member));
        }
        used = static_cast<long long>(ball.size());
      } else {
        for (long long i = 0; i < opts.ball_sample_cap; ++i) {
          const Subset& member =
              ball[rng.uniform_int(static_cast<int>(ball.size()))];
          total += oracle.noisy_value(current.unite(member));
        }
        used = opts.ball_sample_cap;
      }
      const double mean = total / used;
      if (!have_bundle || mean > best_mean) {
        have_bundle = true;
        best_bundle = bundle;
        best_mean = mean;
      }
    }

    std::vector<Subset> ball = ball_members(constraint, current, best_bundle, n);
    if (ball.empty()) ball.push_back(best_bundle);
    Subset best_member;
    double best_value = 0.0;
    double best_true = 0.0;
    bool have_member = false;
    for (const Subset& member : ball) {
      const Subset with = current.unite(member);
      const double value = oracle.noisy_value(with);
      bool better = !have_member || value > best_value;
      if (have_member && opts.adversarial_ties && value == best_value) {
        // Worst-case adjudication: among noisy ties keep the lowest true
        // value (read out of band).
        better = oracle.objective().evaluate(with) < best_true;
      }
      if (better) {
        have_member = true;
        best_member = member;
        best_value = value;
        if (opts.adversarial_ties) {
          best_true = oracle.objective().evaluate(with);
        }
      }
    }
    current = current.unite(best_member);
  }
  report.chosen = current;
  finish_report(report, oracle, before, watch);
  return report;
}

SolverReport solve(NoisyOracle& oracle, const ConstraintOracle& constraint,
                   double epsilon, const std::string& regime,
                   const SolverOptions& opts) {
  const int n = oracle.objective().ground_size();
  const int r = constraint.rank();
  const bool cardinality =
      constraint.kind() == ConstraintOracle::Kind::kUniform;
  std::string choice = regime;
  if (regime == "auto") {
    const bool small = static_cast<long long>(r) * r * r <= n;
    if (cardinality) {
      choice = small ? "card-small" : "card-large";
    } else {
      choice = small ? "matroid-small" : "matroid-large";
    }
  }
  if (choice == "card-small" || choice == "card-large") {
    if (!cardinality) {
      throw std::invalid_argument("solve: " + choice +
                                  " requires a uniform constraint");
    }
    return choice == "card-small"
               ? solve_cardinality_small(oracle, r, epsilon, opts)
               : solve_cardinality_large(oracle, r, epsilon, opts);
  }
  if (choice == "matroid-small") {
    return solve_matroid_small(oracle, constraint, epsilon, opts);
  }
  if (choice == "matroid-large") {
    return solve_matroid_large(oracle, constraint, epsilon, opts);
  }
  if (choice == "sbo") return solve_sbo(oracle, constraint, epsilon, opts);
  if (choice == "greedy") return baseline_greedy_noisy(oracle, constraint, opts);
  if (choice == "bundle-greedy") {
    return baseline_bundle_greedy(oracle, constraint, opts);
  }
  throw std::invalid_argument("solve: unknown regime " + regime);
}

}  // namespace noisyls
