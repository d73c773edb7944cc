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

#include <cstdint>
#include <vector>

#include "votedim/game.hpp"

namespace votedim {

/// Enumeration-level operations materialize the whole outcome function; this
/// cap keeps them at 2^24 bits (2 MiB) at most.
inline constexpr int kEnumerationCap = 24;

/// The outcome of every coalition of a small game, one bit per subset mask
/// (voter v <-> bit v-1). Built once, then shared by the enumeration-level
/// operations; bitwise AND/OR directly implement game combinations.
class WinningTable {
 public:
  explicit WinningTable(int n) : n_(n), words_((std::size_t{1} << n) / 64 + 1, 0) {}

  static WinningTable build(const Game& game);  // throws CapExceeded if n > 24

  int n() const { return n_; }
  std::uint32_t mask_count() const { return std::uint32_t{1} << n_; }
  bool winning(std::uint32_t mask) const {
    return (words_[mask >> 6] >> (mask & 63)) & 1u;
  }
  void set(std::uint32_t mask) { words_[mask >> 6] |= std::uint64_t{1} << (mask & 63); }

  void combine(BoolOp op, const WinningTable& other);

  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const WinningTable& a, const WinningTable& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }

 private:
  int n_;
  std::vector<std::uint64_t> words_;
};

}  // namespace votedim
