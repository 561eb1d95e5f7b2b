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

#include "noisyls/local_search.hpp"

#include <cmath>
#include <stdexcept>

namespace noisyls {

long long iteration_cap(double alpha, double step, int r) {
  if (!(step > 0.0)) throw std::invalid_argument("iteration_cap: step <= 0");
  if (alpha < 0.0) throw std::invalid_argument("iteration_cap: alpha < 0");
  const double denom = 1.0 - 2.0 * (r + 1) * alpha;
  if (!(denom > 0.0)) {
    throw std::invalid_argument("iteration_cap: alpha too large for this rank");
  }
  const double arg = 2.0 * (1.0 + alpha) / denom;
  const double raw = std::log(arg) / std::log1p(step);
  return static_cast<long long>(std::ceil(raw));
}

NLSParameters choose_parameters(double epsilon, int r) {
  if (r < 2) throw std::invalid_argument("choose_parameters: r < 2");
  if (!(epsilon > 0.0 && epsilon < 0.5)) {
    throw std::invalid_argument("choose_parameters: epsilon outside (0, 1/2)");
  }
  NLSParameters p;
  p.alpha = p.step = epsilon / (4.0 * r * std::log(static_cast<double>(r)));
  p.iterations = iteration_cap(p.alpha, p.step, r);
  const long long budget = static_cast<long long>(
      std::ceil(5.0 * r * std::log(static_cast<double>(r)) / epsilon));
  if (p.iterations > budget) {
    throw std::logic_error("choose_parameters: iteration budget exceeded");
  }
  return p;
}

std::pair<Subset, NLSTrace> nls(const ApproxOracle& approx,
                                const ConstraintOracle& constraint,
                                const NLSConfig& cfg) {
  if (cfg.iteration_cap < 1) throw std::invalid_argument("nls: iteration cap < 1");
  NLSTrace trace;
  const int n = constraint.ground_size();
  // All evaluations that feed one comparison share a call index, so a
  // sampling-based oracle can reuse one random stream across them. Paired
  // draws cancel the shared noise in comparisons of overlapping sets; each
  // estimate stays marginally unbiased, so per-call accuracy is unaffected.
  auto eval = [&](const Subset& s, std::uint64_t call) {
    ++trace.approx_calls;
    return approx.evaluate(s, call);
  };

  const int r = constraint.rank();
  Subset current;
  for (int step = 0; step < r; ++step) {
    int best_elem = -1;
    double best_value = 0.0;
    for (int e = 0; e < n; ++e) {
      if (current.contains(e)) continue;
      const Subset candidate = current.plus(e);
      if (!constraint.is_independent(candidate)) continue;
      const double value = eval(candidate, static_cast<std::uint64_t>(step));
      if (best_elem < 0 || value > best_value) {
        best_elem = e;
        best_value = value;
      }
    }
    if (best_elem < 0) break;  // cannot happen for a matroid below rank
    current = current.plus(best_elem);
    trace.greedy_states.push_back(current);
  }

  for (long long iter = 1; iter <= cfg.iteration_cap; ++iter) {
    const std::uint64_t call = static_cast<std::uint64_t>(r) + iter;
    const double current_value = eval(current, call);
    bool accepted = false;
    for (std::size_t xi = 0; xi < current.ids().size() && !accepted; ++xi) {
      const int x = current.ids()[xi];
      const Subset without = current.minus(x);
      for (int y = 0; y < n && !accepted; ++y) {
        if (current.contains(y)) continue;
        const Subset candidate = without.plus(y);
        if (!constraint.is_independent(candidate)) continue;
        const double value = eval(candidate, call);
        if (value >= (1.0 + cfg.step) * current_value) {
          trace.swaps.push_back({iter, x, y, current_value, value});
          current = candidate;
          accepted = true;
        }
      }
    }
    if (!accepted && !cfg.strict_paper) break;
  }
  return {current, std::move(trace)};
}

}  // namespace noisyls
