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

#ifndef NOISYLS_TAU_HPP_
#define NOISYLS_TAU_HPP_

#include <vector>

#include "noisyls/coefficients.hpp"
#include "noisyls/subset.hpp"

namespace noisyls {

/// Linear coefficients of the auxiliary function of a set A of size a over a
/// ground set of size n, grouped into classes that share a weight:
///   INSIDE, size t in 1..a: every T subset of A with |T| = t has weight
///     t * (m(a-1, t-1) + m(a-1, t-2)) / n.
///   OUTSIDE, size s in 1..a: every pair (S subset of A with |S| = s,
///     e outside A) yields T = S + e with weight m(a-1, s-1) / n.
/// Pairs with S empty vanish because m(a-1, -1) = 0. Class totals are kept in
/// log space so large a does not overflow the binomial counts.
class TauClasses {
 public:
  struct ClassInfo {
    bool inside;         // else OUTSIDE
    int subset_size;     // t for INSIDE, |S| = s for OUTSIDE (|T| = s + 1)
    double weight;       // per member
    double log_count;    // ln of the member count
    double log_total;    // ln(count * weight)
  };

  TauClasses(const CoefficientTable& table, int a, int n);

  int set_size() const { return a_; }
  int ground_size() const { return n_; }
  const std::vector<ClassInfo>& classes() const { return classes_; }

  double inside_weight(int t) const;
  double outside_weight(int s) const;

  double total_weight() const { return total_; }           // sum of tau
  double total_weight_squared() const { return total_sq_; }  // sum of tau^2
  double max_weight() const { return max_; }

  /// The coefficient of f(T) in the auxiliary function of A; zero for sets
  /// outside the support.
  double tau_of(const Subset& a_set, const Subset& t_set) const;

 private:
  int a_;
  int n_;
  std::vector<double> inside_;   // index t, 1..a
  std::vector<double> outside_;  // index s, 1..a
  std::vector<ClassInfo> classes_;
  double total_ = 0.0;
  double total_sq_ = 0.0;
  double max_ = 0.0;
};

}  // namespace noisyls

#endif  // NOISYLS_TAU_HPP_
