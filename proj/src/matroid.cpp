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

#include "noisyls/matroid.hpp"

#include <algorithm>
#include <stdexcept>

namespace noisyls {

ConstraintOracle ConstraintOracle::uniform(int n, int r) {
  if (n < 1 || r < 1) throw std::invalid_argument("uniform: need n >= 1, r >= 1");
  ConstraintOracle c;
  c.kind_ = Kind::kUniform;
  c.n_ = n;
  c.r_ = std::min(r, n);
  return c;
}

ConstraintOracle ConstraintOracle::partition(int n,
                                             std::vector<std::vector<int>> blocks,
                                             std::vector<int> caps) {
  if (blocks.size() != caps.size()) {
    throw std::invalid_argument("partition: blocks/caps size mismatch");
  }
  ConstraintOracle c;
  c.kind_ = Kind::kPartition;
  c.n_ = n;
  c.block_of_.assign(n, -1);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (caps[i] < 1) throw std::invalid_argument("partition: cap < 1");
    for (int e : blocks[i]) {
      if (e < 0 || e >= n || c.block_of_[e] != -1) {
        throw std::invalid_argument("partition: blocks must partition the ground set");
      }
      c.block_of_[e] = static_cast<int>(i);
    }
  }
  for (int e = 0; e < n; ++e) {
    if (c.block_of_[e] == -1) {
      throw std::invalid_argument("partition: element not covered by any block");
    }
  }
  c.caps_ = std::move(caps);
  return c;
}

ConstraintOracle ConstraintOracle::contraction(ConstraintOracle base,
                                               Subset pinned) {
  if (!base.is_independent(pinned)) {
    throw std::invalid_argument("contraction: pinned set not independent");
  }
  ConstraintOracle c;
  c.kind_ = Kind::kContraction;
  c.n_ = base.n_;
  c.pinned_ = std::move(pinned);
  c.base_ = std::make_shared<const ConstraintOracle>(std::move(base));
  return c;
}

ConstraintOracle ConstraintOracle::truncation(ConstraintOracle base, int cap) {
  if (cap < 0) throw std::invalid_argument("truncation: negative cap");
  ConstraintOracle c;
  c.kind_ = Kind::kTruncation;
  c.n_ = base.n_;
  c.r_ = cap;
  c.base_ = std::make_shared<const ConstraintOracle>(std::move(base));
  return c;
}

ConstraintOracle ConstraintOracle::explicit_sets(int n,
                                                 std::vector<Subset> independent) {
  ConstraintOracle c;
  c.kind_ = Kind::kExplicit;
  c.n_ = n;
  c.explicit_.insert(independent.begin(), independent.end());
  if (c.explicit_.find(Subset()) == c.explicit_.end()) {
    throw std::invalid_argument("explicit_sets: empty set must be independent");
  }
  return c;
}

bool ConstraintOracle::is_independent(const Subset& s) const {
  if (!s.empty() && s.ids().back() >= n_) {
    throw std::invalid_argument("is_independent: element id out of range");
  }
  switch (kind_) {
    case Kind::kUniform:
      return s.size() <= r_;
    case Kind::kPartition: {
      std::vector<int> used(caps_.size(), 0);
      for (int e : s.ids()) {
        if (++used[block_of_[e]] > caps_[block_of_[e]]) return false;
      }
      return true;
    }
    case Kind::kContraction:
      if (!s.intersect(pinned_).empty()) return false;
      return base_->is_independent(s.unite(pinned_));
    case Kind::kTruncation:
      return s.size() <= r_ && base_->is_independent(s);
    case Kind::kExplicit:
      return explicit_.find(s) != explicit_.end();
  }
  return false;
}

int ConstraintOracle::rank() const { return extend_to_base(Subset()).size(); }

Subset ConstraintOracle::extend_to_base(const Subset& s) const {
  if (!is_independent(s)) {
    throw std::invalid_argument("extend_to_base: set not independent");
  }
  Subset result = s;
  for (int e = 0; e < n_; ++e) {
    if (result.contains(e)) continue;
    Subset candidate = result.plus(e);
    if (is_independent(candidate)) result = std::move(candidate);
  }
  return result;
}

std::vector<int> ConstraintOracle::ground_elements() const {
  std::vector<int> out;
  for (int e = 0; e < n_; ++e) {
    if (is_independent(Subset({e}))) out.push_back(e);
  }
  return out;
}

int ConstraintOracle::block_of(int e) const {
  if (kind_ != Kind::kPartition) {
    throw std::logic_error("block_of: not a partition oracle");
  }
  if (e < 0 || e >= n_) throw std::invalid_argument("block_of: id out of range");
  return block_of_[e];
}

namespace {

Subset subset_of_mask(std::uint32_t mask, int n) {
  std::vector<int> ids;
  for (int i = 0; i < n; ++i) {
    if (mask & (1u << i)) ids.push_back(i);
  }
  return Subset(ids);
}

}  // namespace

bool check_downward_closed(const ConstraintOracle& c) {
  const int n = c.ground_size();
  if (n > 16) throw std::invalid_argument("check_downward_closed: n > 16");
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const Subset s = subset_of_mask(mask, n);
    if (!c.is_independent(s)) continue;
    for (int e : s.ids()) {
      if (!c.is_independent(s.minus(e))) return false;
    }
  }
  return true;
}

bool check_exchange_axiom(const ConstraintOracle& c) {
  const int n = c.ground_size();
  if (n > 12) throw std::invalid_argument("check_exchange_axiom: n > 12");
  std::vector<Subset> indep;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    Subset s = subset_of_mask(mask, n);
    if (c.is_independent(s)) indep.push_back(std::move(s));
  }
  for (const Subset& a : indep) {
    for (const Subset& b : indep) {
      if (a.size() >= b.size()) continue;
      bool found = false;
      const Subset extra = b.difference(a);
      for (int x : extra.ids()) {
        if (c.is_independent(a.plus(x))) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

namespace {

bool brualdi_match(const ConstraintOracle& c, const std::vector<int>& a_ids,
                   const Subset& a, const Subset& b, std::size_t pos,
                   std::vector<bool>& used, std::map<int, int>& out) {
  const std::vector<int>& b_ids = b.ids();
  if (pos == a_ids.size()) return true;
  const int x = a_ids[pos];
  const Subset without = a.minus(x);
  for (std::size_t j = 0; j < b_ids.size(); ++j) {
    if (used[j]) continue;
    const int y = b_ids[j];
    // Identity is forced on the intersection, in both directions.
    if (a.contains(y) && y != x) continue;
    if (b.contains(x) && y != x) continue;
    if (y != x) {
      if (without.contains(y)) continue;
      if (!c.is_independent(without.plus(y))) continue;
    }
    used[j] = true;
    out[x] = y;
    if (brualdi_match(c, a_ids, a, b, pos + 1, used, out)) return true;
    used[j] = false;
    out.erase(x);
  }
  return false;
}

}  // namespace

std::map<int, int> brualdi_bijection_bruteforce(const ConstraintOracle& c,
                                                const Subset& a,
                                                const Subset& b) {
  if (c.ground_size() > 12) {
    throw std::invalid_argument("brualdi_bijection_bruteforce: n > 12");
  }
  const int r = c.rank();
  if (a.size() != r || b.size() != r || !c.is_independent(a) ||
      !c.is_independent(b)) {
    throw std::invalid_argument("brualdi_bijection_bruteforce: inputs must be bases");
  }
  std::vector<bool> used(b.ids().size(), false);
  std::map<int, int> out;
  if (!brualdi_match(c, a.ids(), a, b, 0, used, out)) {
    throw std::runtime_error(
        "brualdi_bijection_bruteforce: no bijection; oracle is not a matroid");
  }
  return out;
}

std::map<int, int> sbo_bijection_partition(const ConstraintOracle& p,
                                           const Subset& b1, const Subset& b2) {
  if (p.kind() != ConstraintOracle::Kind::kPartition) {
    throw std::invalid_argument("sbo_bijection_partition: partition oracle required");
  }
  const int r = p.rank();
  if (b1.size() != r || b2.size() != r || !p.is_independent(b1) ||
      !p.is_independent(b2)) {
    throw std::invalid_argument("sbo_bijection_partition: inputs must be bases");
  }
  const std::size_t block_count = p.caps().size();
  std::vector<std::vector<int>> left(block_count), right(block_count);
  const Subset common = b1.intersect(b2);
  for (int e : b1.ids()) {
    if (!common.contains(e)) left[p.block_of(e)].push_back(e);
  }
  for (int e : b2.ids()) {
    if (!common.contains(e)) right[p.block_of(e)].push_back(e);
  }
  std::map<int, int> out;
  for (int e : common.ids()) out[e] = e;
  for (std::size_t i = 0; i < block_count; ++i) {
    if (left[i].size() != right[i].size()) {
      throw std::runtime_error(
          "sbo_bijection_partition: bases differ in per-block counts");
    }
    for (std::size_t j = 0; j < left[i].size(); ++j) out[left[i][j]] = right[i][j];
  }
  return out;
}

}  // namespace noisyls
