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

#include "noisyls/objective.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace noisyls {
namespace {

void check_nonnegative(const std::vector<double>& w, const char* what) {
  for (double x : w) {
    if (!(x >= 0.0)) throw std::invalid_argument(std::string(what) + ": negative weight");
  }
}

}  // namespace

Objective Objective::modular(std::vector<double> weights) {
  check_nonnegative(weights, "modular");
  Objective o;
  o.n_ = static_cast<int>(weights.size());
  o.kind_ = Kind::kModular;
  o.weights_ = std::move(weights);
  if (o.n_ < 1) throw std::invalid_argument("modular: empty ground set");
  return o;
}

Objective Objective::coverage(int n, int item_count,
                              std::vector<std::vector<int>> covers,
                              std::vector<double> item_weights) {
  if (n < 1) throw std::invalid_argument("coverage: empty ground set");
  if (static_cast<int>(covers.size()) != n) {
    throw std::invalid_argument("coverage: covers size mismatch");
  }
  if (static_cast<int>(item_weights.size()) != item_count) {
    throw std::invalid_argument("coverage: item weight size mismatch");
  }
  check_nonnegative(item_weights, "coverage");
  Objective o;
  o.n_ = n;
  o.kind_ = Kind::kCoverage;
  o.item_count_ = item_count;
  o.item_weights_ = std::move(item_weights);
  const int words = (item_count + 63) / 64;
  o.cover_masks_.assign(n, std::vector<std::uint64_t>(words, 0));
  for (int e = 0; e < n; ++e) {
    for (int item : covers[e]) {
      if (item < 0 || item >= item_count) {
        throw std::invalid_argument("coverage: item id out of range");
      }
      o.cover_masks_[e][item / 64] |= 1ULL << (item % 64);
    }
  }
  return o;
}

Objective Objective::facility(std::vector<std::vector<double>> utility) {
  if (utility.empty() || utility.front().empty()) {
    throw std::invalid_argument("facility: empty utility matrix");
  }
  const std::size_t n = utility.front().size();
  for (const auto& row : utility) {
    if (row.size() != n) throw std::invalid_argument("facility: ragged utility matrix");
    check_nonnegative(row, "facility");
  }
  Objective o;
  o.n_ = static_cast<int>(n);
  o.kind_ = Kind::kFacility;
  o.utility_ = std::move(utility);
  return o;
}

void Objective::validate_subset(const Subset& s) const {
  if (!s.empty() && s.ids().back() >= n_) {
    throw std::invalid_argument("element id out of range for objective");
  }
}

double Objective::evaluate(const Subset& s) const {
  validate_subset(s);
  switch (kind_) {
    case Kind::kModular: {
      double total = 0.0;
      for (int e : s.ids()) total += weights_[e];
      return total;
    }
    case Kind::kCoverage: {
      if (s.empty()) return 0.0;
      const int words = static_cast<int>(cover_masks_.front().size());
      std::uint64_t stack_buf[16];
      std::vector<std::uint64_t> heap_buf;
      std::uint64_t* acc = stack_buf;
      if (words > 16) {
        heap_buf.assign(words, 0);
        acc = heap_buf.data();
      } else {
        std::fill(stack_buf, stack_buf + words, 0ULL);
      }
      for (int e : s.ids()) {
        const auto& mask = cover_masks_[e];
        for (int w = 0; w < words; ++w) acc[w] |= mask[w];
      }
      double total = 0.0;
      for (int w = 0; w < words; ++w) {
        std::uint64_t bits = acc[w];
        while (bits) {
          const int b = std::countr_zero(bits);
          total += item_weights_[w * 64 + b];
          bits &= bits - 1;
        }
      }
      return total;
    }
    case Kind::kFacility: {
      double total = 0.0;
      for (const auto& row : utility_) {
        double best = 0.0;
        for (int e : s.ids()) best = std::max(best, row[e]);
        total += best;
      }
      return total;
    }
  }
  return 0.0;
}

double Objective::marginal(const Subset& s, int x) const {
  if (s.contains(x)) throw std::invalid_argument("marginal: element already in set");
  return evaluate(s.plus(x)) - evaluate(s);
}

SubmodularityReport verify_submodular_monotone(
    const std::function<double(const Subset&)>& f, int n, double tolerance) {
  if (n > 14) throw std::invalid_argument("verify_submodular_monotone: n > 14");
  const std::uint32_t total = 1u << n;
  std::vector<double> value(total);
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    std::vector<int> ids;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) ids.push_back(i);
    }
    value[mask] = f(Subset(ids));
  }
  auto subset_of = [&](std::uint32_t mask) {
    std::vector<int> ids;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) ids.push_back(i);
    }
    return Subset(ids);
  };
  SubmodularityReport report;
  // Iterate B, its submasks A, and x outside B.
  for (std::uint32_t b = 0; b < total; ++b) {
    for (std::uint32_t a = b;; a = (a - 1) & b) {
      for (int x = 0; x < n; ++x) {
        const std::uint32_t bit = 1u << x;
        if (b & bit) continue;
        const double gain_a = value[a | bit] - value[a];
        const double gain_b = value[b | bit] - value[b];
        if (gain_b < -tolerance || gain_a < gain_b - tolerance) {
          report.ok = false;
          report.witness = SubmodularityWitness{
              subset_of(a), subset_of(b), x, gain_a, gain_b,
              gain_b < -tolerance};
          return report;
        }
      }
      if (a == 0) break;
    }
  }
  return report;
}

}  // namespace noisyls
