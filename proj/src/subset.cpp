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

#include "noisyls/subset.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace noisyls {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Subset::Subset(std::vector<int> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  auto last = std::unique(ids_.begin(), ids_.end());
  ids_.erase(last, ids_.end());
  if (!ids_.empty() && ids_.front() < 0) {
    throw std::invalid_argument("Subset: negative element id");
  }
}

Subset Subset::full(int n) {
  Subset s;
  s.ids_.resize(n);
  for (int i = 0; i < n; ++i) s.ids_[i] = i;
  return s;
}

bool Subset::contains(int x) const {
  return std::binary_search(ids_.begin(), ids_.end(), x);
}

Subset Subset::plus(int x) const {
  if (contains(x)) throw std::invalid_argument("Subset::plus: element already present");
  Subset s = *this;
  s.ids_.insert(std::lower_bound(s.ids_.begin(), s.ids_.end(), x), x);
  return s;
}

Subset Subset::minus(int x) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), x);
  if (it == ids_.end() || *it != x) {
    throw std::invalid_argument("Subset::minus: element absent");
  }
  Subset s = *this;
  s.ids_.erase(s.ids_.begin() + (it - ids_.begin()));
  return s;
}

Subset Subset::unite(const Subset& other) const {
  Subset s;
  std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                 std::back_inserter(s.ids_));
  return s;
}

Subset Subset::intersect(const Subset& other) const {
  Subset s;
  std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(),
                        other.ids_.end(), std::back_inserter(s.ids_));
  return s;
}

Subset Subset::difference(const Subset& other) const {
  Subset s;
  std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(),
                      other.ids_.end(), std::back_inserter(s.ids_));
  return s;
}

std::uint64_t Subset::stable_key(std::uint64_t seed) const {
  std::uint64_t h = mix64(seed ^ 0x5eedf00dcafe1234ULL);
  for (int id : ids_) {
    h = mix64(h ^ static_cast<std::uint64_t>(static_cast<std::uint32_t>(id)));
  }
  return mix64(h ^ static_cast<std::uint64_t>(ids_.size()));
}

std::string Subset::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (i) os << ',';
    os << ids_[i];
  }
  os << '}';
  return os.str();
}

}  // namespace noisyls
