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

#include "noisyls/tau.hpp"

#include <cmath>
#include <stdexcept>

namespace noisyls {

TauClasses::TauClasses(const CoefficientTable& table, int a, int n)
    : a_(a), n_(n) {
  if (a < 1 || n < 1 || a > n) {
    throw std::invalid_argument("TauClasses: need 1 <= a <= n");
  }
  inside_.assign(a + 1, 0.0);
  outside_.assign(a + 1, 0.0);
  for (int t = 1; t <= a; ++t) {
    inside_[t] = t * (table.m(a - 1, t - 1) + table.m(a - 1, t - 2)) / n;
    outside_[t] = table.m(a - 1, t - 1) / n;
  }
  const double log_out_elems =
      n > a ? std::log(static_cast<double>(n - a)) : 0.0;
  for (int t = 1; t <= a; ++t) {
    ClassInfo in;
    in.inside = true;
    in.subset_size = t;
    in.weight = inside_[t];
    in.log_count = CoefficientTable::log_binomial(a, t);
    in.log_total = in.log_count + std::log(in.weight);
    classes_.push_back(in);
    if (n > a) {
      ClassInfo out;
      out.inside = false;
      out.subset_size = t;
      out.weight = outside_[t];
      out.log_count = CoefficientTable::log_binomial(a, t) + log_out_elems;
      out.log_total = out.log_count + std::log(out.weight);
      classes_.push_back(out);
    }
  }
  for (const ClassInfo& c : classes_) {
    total_ += std::exp(c.log_total);
    total_sq_ += std::exp(c.log_count + 2.0 * std::log(c.weight));
    if (c.weight > max_) max_ = c.weight;
  }
}

double TauClasses::inside_weight(int t) const {
  if (t < 1 || t > a_) throw std::invalid_argument("inside_weight: bad size");
  return inside_[t];
}

double TauClasses::outside_weight(int s) const {
  if (s < 1 || s > a_) throw std::invalid_argument("outside_weight: bad size");
  return outside_[s];
}

double TauClasses::tau_of(const Subset& a_set, const Subset& t_set) const {
  if (a_set.size() != a_) throw std::invalid_argument("tau_of: |A| mismatch");
  const Subset inside_part = t_set.intersect(a_set);
  const Subset outside_part = t_set.difference(a_set);
  if (outside_part.empty()) {
    if (inside_part.empty()) return 0.0;
    return inside_[inside_part.size()];
  }
  if (outside_part.size() == 1 && !inside_part.empty()) {
    return outside_[inside_part.size()];
  }
  return 0.0;
}

}  // namespace noisyls
