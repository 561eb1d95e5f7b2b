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

#ifndef NOISYLS_LOCAL_SEARCH_HPP_
#define NOISYLS_LOCAL_SEARCH_HPP_

#include <cstdint>
#include <functional>
#include <vector>

#include "noisyls/matroid.hpp"
#include "noisyls/subset.hpp"

namespace noisyls {

/// Randomized approximate evaluator of an auxiliary function. The call index
/// selects the sampling stream; the search passes one index to every
/// evaluation feeding the same comparison so streams can be shared.
struct ApproxOracle {
  std::function<double(const Subset&, std::uint64_t call_index)> evaluate;
  double alpha = 0.0;
  double delta = 0.0;
};

struct NLSConfig {
  double step = 0.0;            // Delta, the relative improvement threshold
  long long iteration_cap = 1;  // I
  // When set, all iteration_cap improvement rounds run even after a full
  // scan accepts nothing; by default such a scan ends the search early.
  bool strict_paper = false;
};

struct NLSTrace {
  struct Swap {
    long long iteration;
    int removed;
    int added;
    double old_value;
    double new_value;
  };
  std::vector<Subset> greedy_states;
  std::vector<Swap> swaps;
  long long approx_calls = 0;
};

/// Iteration budget ceil(log_{1+step}(2(1+alpha) / (1 - 2(r+1)alpha))).
/// Requires 2(r+1)alpha < 1 and step > 0.
long long iteration_cap(double alpha, double step, int r);

struct NLSParameters {
  double alpha = 0.0;
  double step = 0.0;
  long long iterations = 1;
};

/// alpha = step = epsilon / (4 r ln r); iterations from iteration_cap,
/// checked against the ceil(5 r ln r / epsilon) budget. Requires r >= 2 and
/// epsilon in (0, 1/2).
NLSParameters choose_parameters(double epsilon, int r);

/// Greedy construction of a base followed by threshold local search: scan
/// swaps (x in S, y outside S) in lexicographic order and accept the first
/// feasible one whose approximate value clears (1 + step) times the current
/// value. Deterministic given a deterministic oracle.
std::pair<Subset, NLSTrace> nls(const ApproxOracle& approx,
                                const ConstraintOracle& constraint,
                                const NLSConfig& cfg);

}  // namespace noisyls

#endif  // NOISYLS_LOCAL_SEARCH_HPP_
