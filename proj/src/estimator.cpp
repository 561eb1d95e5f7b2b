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

#include "noisyls/estimator.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace noisyls {

TauDraw sample_tau_member(Rng& rng, const TauClasses& tau, const Subset& a,
                          int n) {
  const auto& classes = tau.classes();
  std::vector<double> log_totals;
  log_totals.reserve(classes.size());
  for (const auto& c : classes) log_totals.push_back(c.log_total);
  const auto& chosen = classes[rng.sample_discrete_log(log_totals)];

  TauDraw draw;
  draw.inside = chosen.inside;
  draw.subset_size = chosen.subset_size;
  Subset t = rng.uniform_subset(a.ids(), chosen.subset_size);
  if (!chosen.inside) {
    std::vector<int> outside;
    outside.reserve(n - a.size());
    for (int e = 0; e < n; ++e) {
      if (!a.contains(e)) outside.push_back(e);
    }
    t = t.plus(outside[rng.uniform_int(static_cast<int>(outside.size()))]);
  }
  draw.member = std::move(t);
  return draw;
}

double estimate_phi_h(NoisyOracle& oracle, const Subset& a,
                      const CoefficientTable& table, const EstimatorConfig& cfg,
                      Rng& rng) {
  if (a.empty()) throw std::invalid_argument("estimate_phi_h: empty A");
  if (cfg.sample_count < 1) throw std::invalid_argument("estimate_phi_h: M < 1");
  const int n = oracle.objective().ground_size();
  const TauClasses tau(table, a.size(), n);
  double total = 0.0;
  for (long long i = 0; i < cfg.sample_count; ++i) {
    total += oracle.noisy_value(sample_tau_member(rng, tau, a, n).member);
  }
  return tau.total_weight() * total / cfg.sample_count;
}

double hH_normalizer(const CoefficientTable& table, int a) {
  if (a < 1) throw std::invalid_argument("hH_normalizer: a < 1");
  double total = 0.0;
  for (int t = 1; t <= a; ++t) {
    total += std::exp(CoefficientTable::log_binomial(a, t) +
                      std::log(table.m(a - 1, t - 1)));
  }
  return total;
}

Subset sample_hH_member(Rng& rng, const CoefficientTable& table,
                        const Subset& a, const Subset& h_set) {
  if (a.empty()) throw std::invalid_argument("sample_hH_member: empty A");
  if (!a.intersect(h_set).empty()) {
    throw std::invalid_argument("sample_hH_member: A and H overlap");
  }
  const int sz = a.size();
  std::vector<double> log_weights(sz);
  for (int t = 1; t <= sz; ++t) {
    log_weights[t - 1] = CoefficientTable::log_binomial(sz, t) +
                         std::log(table.m(sz - 1, t - 1));
  }
  const int t = rng.sample_discrete_log(log_weights) + 1;
  Subset member = rng.uniform_subset(a.ids(), t);
  for (int e : h_set.ids()) {
    if (rng.next_u64() & 1ULL) member = member.plus(e);
  }
  return member;
}

double estimate_phi_hH(NoisyOracle& oracle, const Subset& a,
                       const Subset& h_set, const CoefficientTable& table,
                       const EstimatorConfig& cfg, Rng& rng) {
  if (cfg.sample_count < 1) throw std::invalid_argument("estimate_phi_hH: M < 1");
  const double s = hH_normalizer(table, a.size());
  double total = 0.0;
  for (long long i = 0; i < cfg.sample_count; ++i) {
    total += oracle.noisy_value(sample_hH_member(rng, table, a, h_set));
  }
  return s * total / cfg.sample_count;
}

}  // namespace noisyls
