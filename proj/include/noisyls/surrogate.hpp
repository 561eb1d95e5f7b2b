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

#ifndef NOISYLS_SURROGATE_HPP_
#define NOISYLS_SURROGATE_HPP_

#include <functional>

#include "noisyls/coefficients.hpp"
#include "noisyls/subset.hpp"

namespace noisyls {

using ValueFn = std::function<double(const Subset&)>;

/// h(S) = (1/n) sum over all ground elements e of f(S+e), where f(S+e) is
/// read as f(S) when e is already in S. Costs n calls to value_fn.
double surrogate_h(const ValueFn& value_fn, const Subset& s, int n);

/// h_H(S) = 2^{-|H|} sum over subsets H_j of H of f(S union H_j). Exact
/// enumeration; refuses |H| > 22. S and H must be disjoint.
double surrogate_hH(const ValueFn& value_fn, const Subset& h_set,
                    const Subset& s);

/// f_0(S) = (1/|S|) sum over e in S of f(S-e). S must be nonempty.
double f0(const ValueFn& value_fn, const Subset& s);

/// Definition-form auxiliary function: sum over T subset of A of
/// m(|A|-1, |T|-1) * surrogate(T). Exact enumeration over 2^|A| subsets;
/// refuses |A| > 14. Oracle/test use.
double phi_exact_bruteforce(const ValueFn& surrogate, const Subset& a,
                            const CoefficientTable& table);

/// Coefficient-form auxiliary function of the h surrogate: the tau-weighted
/// sum of f over inside subsets and one-outside extensions. Must agree with
/// phi_exact_bruteforce over surrogate_h; the tests rely on the two formulas
/// being computed independently.
double phi_coefficient_form(const ValueFn& value_fn, const Subset& a, int n,
                            const CoefficientTable& table);

}  // namespace noisyls

#endif  // NOISYLS_SURROGATE_HPP_
