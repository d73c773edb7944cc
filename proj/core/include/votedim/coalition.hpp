// Copyright 2026 The votedim Authors
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

#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace votedim {

inline constexpr int kMaxVoters = 128;

/// A set of voters out of {1, ..., n}, n <= 128, stored as a fixed bitset.
///
/// Voters are 1-based everywhere in the public interface; bit v-1 of the
/// underlying words holds voter v. The ambient size n travels with the set so
/// complements and validation are well defined.
class Coalition {
 public:
  Coalition() : n_(0), bits_{0, 0} {}
  explicit Coalition(int n);
  static Coalition full(int n);
  static Coalition from_members(int n, const std::vector<int>& members);
  /// Low n bits of `mask` (voter v <-> bit v-1); requires n <= 64.
  static Coalition from_mask(int n, std::uint64_t mask);

  int n() const { return n_; }
  int size() const;
  bool empty() const { return bits_[0] == 0 && bits_[1] == 0; }

  bool contains(int voter) const;
  void add(int voter);
  void remove(int voter);

  bool subset_of(const Coalition& other) const;
  bool intersects(const Coalition& other) const;
  Coalition united(const Coalition& other) const;
  Coalition intersected(const Coalition& other) const;
  Coalition minus(const Coalition& other) const;
  Coalition complement() const;

  std::vector<int> members() const;
  std::uint64_t to_mask() const;  // requires n <= 64

  friend bool operator==(const Coalition& a, const Coalition& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }
  friend bool operator!=(const Coalition& a, const Coalition& b) { return !(a == b); }
  /// Colexicographic order: the set whose largest differing voter is absent
  /// comes first. Identical to comparing the bitsets as 128-bit numbers.
  friend bool operator<(const Coalition& a, const Coalition& b) {
    if (a.bits_[1] != b.bits_[1]) return a.bits_[1] < b.bits_[1];
    return a.bits_[0] < b.bits_[0];
  }

  std::uint64_t word(int i) const { return bits_[i]; }

 private:
  int n_;
  std::array<std::uint64_t, 2> bits_;
};

}  // namespace votedim
