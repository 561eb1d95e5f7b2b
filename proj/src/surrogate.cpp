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

#include "noisyls/surrogate.hpp"

#include <stdexcept>

#include "noisyls/tau.hpp"

namespace noisyls {
namespace {

Subset pick(const std::vector<int>& ids, std::uint32_t mask) {
  std::vector<int> chosen;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (mask & (1u << i)) chosen.push_back(ids[i]);
  }
  return Subset(chosen);
}

}  // namespace

double surrogate_h(const ValueFn& value_fn, const Subset& s, int n) {
  if (n < 1) throw std::invalid_argument("surrogate_h: n < 1");
  double total = 0.0;
  for (int e = 0; e < n; ++e) {
    total += value_fn(s.contains(e) ? s : s.plus(e));
  }
  return total / n;
}

double surrogate_hH(const ValueFn& value_fn, const Subset& h_set,
                    const Subset& s) {
  if (h_set.size() > 22) throw std::invalid_argument("surrogate_hH: |H| > 22");
  if (!s.intersect(h_set).empty()) {
    throw std::invalid_argument("surrogate_hH: S and H overlap");
  }
  const std::uint32_t total_masks = 1u << h_set.size();
  double total = 0.0;
  for (std::uint32_t mask = 0; mask < total_masks; ++mask) {
    total += value_fn(s.unite(pick(h_set.ids(), mask)));
  }
  return total / total_masks;
}

double f0(const ValueFn& value_fn, const Subset& s) {
  if (s.empty()) throw std::invalid_argument("f0: empty set");
  double total = 0.0;
  for (int e : s.ids()) total += value_fn(s.minus(e));
  return total / s.size();
}

double phi_exact_bruteforce(const ValueFn& surrogate, const Subset& a,
                            const CoefficientTable& table) {
  if (a.size() > 14) throw std::invalid_argument("phi_exact_bruteforce: |A| > 14");
  const int sz = a.size();
  double total = 0.0;
  for (std::uint32_t mask = 1; mask < (1u << sz); ++mask) {
    const Subset t = pick(a.ids(), mask);
    total += table.m(sz - 1, t.size() - 1) * surrogate(t);
  }
  return total;
}

double phi_coefficient_form(const ValueFn& value_fn, const Subset& a, int n,
                            const CoefficientTable& table) {
  if (a.size() > 14) throw std::invalid_argument("phi_coefficient_form: |A| > 14");
  const int sz = a.size();
  const TauClasses tau(table, sz, n);
  std::vector<int> outside;
  for (int e = 0; e < n; ++e) {
    if (!a.contains(e)) outside.push_back(e);
  }
  double total = 0.0;
  for (std::uint32_t mask = 1; mask < (1u << sz); ++mask) {
    const Subset s = pick(a.ids(), mask);
    total += tau.inside_weight(s.size()) * value_fn(s);
    for (int e : outside) {
      total += tau.outside_weight(s.size()) * value_fn(s.plus(e));
    }
  }
  return total;
}

}  // namespace noisyls
