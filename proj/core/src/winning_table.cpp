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

#include "votedim/winning_table.hpp"

#include <bit>
#include <string>

#include "votedim/errors.hpp"

namespace votedim {

namespace {

WinningTable build_impl(const Game& game);

WinningTable from_explicit(const ExplicitGame& g) {
  WinningTable t(g.n);
  // Seed the minimal winning coalitions, then close upward: a mask wins iff
  // it is seeded or some mask with one voter fewer wins.
  for (const auto& w : g.min_winning) {
    t.set(static_cast<std::uint32_t>(w.to_mask()));
  }
  const std::uint32_t count = t.mask_count();
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    if (t.winning(mask)) continue;
    std::uint32_t bits = mask;
    while (bits != 0) {
      const std::uint32_t low = bits & (0u - bits);
      if (t.winning(mask ^ low)) {
        t.set(mask);
        break;
      }
      bits ^= low;
    }
  }
  return t;
}

WinningTable from_weighted(const WeightedGame& g) {
  WinningTable t(g.n());
  // Walk the masks in Gray-code order so each step adjusts the running total
  // by a single weight; with exact rationals the walk stays exact.
  const std::uint32_t count = t.mask_count();
  Rational sum = 0;
  std::uint32_t prev_gray = 0;
  if (sum >= g.quota) t.set(0);
  for (std::uint32_t i = 1; i < count; ++i) {
    const std::uint32_t gray = i ^ (i >> 1);
    const std::uint32_t changed = gray ^ prev_gray;
    const int voter = std::countr_zero(changed);
    if (gray & changed) {
      sum += g.weights[static_cast<std::size_t>(voter)];
    } else {
      sum -= g.weights[static_cast<std::size_t>(voter)];
    }
    if (sum >= g.quota) t.set(gray);
    prev_gray = gray;
  }
  return t;
}

WinningTable from_vector(const VectorGame& g) {
  WinningTable t(g.n());
  std::vector<std::uint32_t> class_masks;
  for (int h = 1; h <= g.t(); ++h) {
    class_masks.push_back(static_cast<std::uint32_t>(g.class_members(h).to_mask()));
  }
  const std::uint32_t count = t.mask_count();
  TypeVector m(static_cast<std::size_t>(g.t()));
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    for (std::size_t h = 0; h < class_masks.size(); ++h) {
      m[h] = std::popcount(mask & class_masks[h]);
    }
    for (const auto& mw : g.shift_min_winning) {
      if (dominates(m, mw)) {
        t.set(mask);
        break;
      }
    }
  }
  return t;
}

WinningTable from_combination(const Combination& g) {
  WinningTable acc = build_impl(g.parts.front());
  for (std::size_t p = 1; p < g.parts.size(); ++p) {
    acc.combine(g.op, build_impl(g.parts[p]));
  }
  return acc;
}

WinningTable build_impl(const Game& game) {
  if (game.n() > kEnumerationCap) {
    throw CapExceeded("coalition enumeration supports at most " +
                      std::to_string(kEnumerationCap) + " voters, game has " +
                      std::to_string(game.n()));
  }
  return std::visit(
      [](const auto& g) -> WinningTable {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, ExplicitGame>) {
          return from_explicit(g);
        } else if constexpr (std::is_same_v<T, WeightedGame>) {
          return from_weighted(g);
        } else if constexpr (std::is_same_v<T, VectorGame>) {
          return from_vector(g);
        } else {
          return from_combination(g);
        }
      },
      game.repr());
}

}  // namespace

void WinningTable::combine(BoolOp op, const WinningTable& other) {
  if (other.n_ != n_) throw InvalidArgument("combining tables of different sizes");
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (op == BoolOp::And) {
      words_[i] &= other.words_[i];
    } else {
      words_[i] |= other.words_[i];
    }
  }
}

WinningTable WinningTable::build(const Game& game) { return build_impl(game); }

}  // namespace votedim
