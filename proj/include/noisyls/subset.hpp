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

#ifndef NOISYLS_SUBSET_HPP_
#define NOISYLS_SUBSET_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace noisyls {

/// A subset of a ground set {0, ..., n-1}, stored as ascending unique ids.
/// The canonical ordering makes hashing and the noise keying stable.
class Subset {
 public:
  Subset() = default;
  explicit Subset(std::vector<int> ids);

  static Subset full(int n);

  bool contains(int x) const;
  Subset plus(int x) const;   // throws if x already present
  Subset minus(int x) const;  // throws if x absent
  Subset unite(const Subset& other) const;
  Subset intersect(const Subset& other) const;
  Subset difference(const Subset& other) const;

  int size() const { return static_cast<int>(ids_.size()); }
  bool empty() const { return ids_.empty(); }
  const std::vector<int>& ids() const { return ids_; }

  bool operator==(const Subset& other) const = default;
  bool operator<(const Subset& other) const { return ids_ < other.ids_; }

  /// Stable 64-bit key of the canonical encoding (elements ascending,
  /// fixed-width little-endian), mixed with `seed`.
  std::uint64_t stable_key(std::uint64_t seed) const;

  std::string to_string() const;

 private:
  std::vector<int> ids_;
};

/// SplitMix64 finalizer; the mixing step behind all keyed hashing here.
std::uint64_t mix64(std::uint64_t x);

}  // namespace noisyls

#endif  // NOISYLS_SUBSET_HPP_
