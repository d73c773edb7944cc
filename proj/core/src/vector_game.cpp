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

#include "votedim/vector_game.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <utility>

#include "votedim/errors.hpp"
#include "votedim/structure.hpp"
#include "votedim/winning_table.hpp"

namespace votedim {

namespace {

void check_in_box(const std::vector<int>& sizes, const TypeVector& m) {
  if (m.size() != sizes.size()) throw InvalidArgument("type vector has wrong length");
  for (std::size_t h = 0; h < m.size(); ++h) {
    if (m[h] < 0 || m[h] > sizes[h]) throw InvalidArgument("type vector out of class bounds");
  }
}

// Every strict dominance step decomposes into these moves (drop a voter of the
// last class, or trade a voter of class h for one of class h+1), so a vector
// is extremal iff all its one-step neighbours are on the other side.
template <typename Winning>
bool is_shift_minimal(const std::vector<int>& sizes, const TypeVector& m, Winning&& winning) {
  const int t = static_cast<int>(sizes.size());
  if (m[static_cast<std::size_t>(t - 1)] > 0) {
    TypeVector down = m;
    --down[static_cast<std::size_t>(t - 1)];
    if (winning(down)) return false;
  }
  for (int h = 0; h + 1 < t; ++h) {
    if (m[static_cast<std::size_t>(h)] == 0 ||
        m[static_cast<std::size_t>(h + 1)] == sizes[static_cast<std::size_t>(h + 1)]) {
      continue;
    }
    TypeVector down = m;
    --down[static_cast<std::size_t>(h)];
    ++down[static_cast<std::size_t>(h + 1)];
    if (winning(down)) return false;
  }
  return true;
}

template <typename Winning>
bool is_shift_maximal(const std::vector<int>& sizes, const TypeVector& m, Winning&& winning) {
  const int t = static_cast<int>(sizes.size());
  if (m[static_cast<std::size_t>(t - 1)] < sizes[static_cast<std::size_t>(t - 1)]) {
    TypeVector up = m;
    ++up[static_cast<std::size_t>(t - 1)];
    if (!winning(up)) return false;
  }
  for (int h = 0; h + 1 < t; ++h) {
    if (m[static_cast<std::size_t>(h)] == sizes[static_cast<std::size_t>(h)] ||
        m[static_cast<std::size_t>(h + 1)] == 0) {
      continue;
    }
    TypeVector up = m;
    ++up[static_cast<std::size_t>(h)];
    --up[static_cast<std::size_t>(h + 1)];
    if (!winning(up)) return false;
  }
  return true;
}

template <typename Winning>
std::vector<TypeVector> extract_shift_min(const std::vector<int>& sizes, Winning&& winning) {
  std::vector<TypeVector> out;
  for_each_grid_vector(sizes, [&](const TypeVector& m) {
    if (winning(m) && is_shift_minimal(sizes, m, winning)) out.push_back(m);
  });
  return out;
}

}  // namespace

bool is_winning_vector(const VectorGame& g, const TypeVector& m) {
  check_in_box(g.class_sizes, m);
  return std::any_of(g.shift_min_winning.begin(), g.shift_min_winning.end(),
                     [&](const TypeVector& mw) { return dominates(m, mw); });
}

ShiftExtremal shift_extremal(const VectorGame& g) {
  const auto winning = [&](const TypeVector& m) {
    return std::any_of(g.shift_min_winning.begin(), g.shift_min_winning.end(),
                       [&](const TypeVector& mw) { return dominates(m, mw); });
  };
  ShiftExtremal out;
  for_each_grid_vector(g.class_sizes, [&](const TypeVector& m) {
    if (winning(m)) {
      if (is_shift_minimal(g.class_sizes, m, winning)) out.shift_min_winning.push_back(m);
    } else if (is_shift_maximal(g.class_sizes, m, winning)) {
      out.shift_max_losing.push_back(m);
    }
  });
  return out;
}

VectorGame from_shift_max_losing(std::vector<int> class_sizes,
                                 const std::vector<TypeVector>& shift_max_losing) {
  if (class_sizes.empty()) throw InvalidArgument("class_sizes must be nonempty");
  for (int s : class_sizes) {
    if (s < 1) throw InvalidArgument("class sizes must be positive");
  }
  if (shift_max_losing.empty()) throw InvalidArgument("need at least one losing vector");
  for (const auto& l : shift_max_losing) check_in_box(class_sizes, l);
  for (std::size_t i = 0; i < shift_max_losing.size(); ++i) {
    for (std::size_t j = 0; j < shift_max_losing.size(); ++j) {
      if (i != j && dominates(shift_max_losing[i], shift_max_losing[j])) {
        throw InvalidArgument("losing vectors must form an antichain");
      }
    }
  }
  TypeVector full(class_sizes.begin(), class_sizes.end());
  const auto losing = [&](const TypeVector& m) {
    return std::any_of(shift_max_losing.begin(), shift_max_losing.end(),
                       [&](const TypeVector& l) { return dominates(l, m); });
  };
  if (losing(full)) throw InvalidArgument("the full coalition must be winning");

  VectorGame out;
  out.class_sizes = std::move(class_sizes);
  out.shift_min_winning =
      extract_shift_min(out.class_sizes, [&](const TypeVector& m) { return !losing(m); });
  return out;
}

VectorGame from_oracle(const Game& g) {
  if (g.is_vector()) {
    VectorGame out;
    out.class_sizes = g.as_vector().class_sizes;
    out.shift_min_winning = shift_extremal(g.as_vector()).shift_min_winning;
    return out;
  }
  const DesirabilityReport report = desirability(g);
  if (!report.complete) throw InvalidArgument("game is not complete");

  const WinningTable table = WinningTable::build(g);
  std::vector<int> sizes;
  sizes.reserve(report.classes.size());
  for (const auto& cls : report.classes) sizes.push_back(static_cast<int>(cls.size()));

  // Voters of a class are interchangeable, so one representative coalition
  // per type vector decides the whole type.
  const auto winning = [&](const TypeVector& m) {
    std::uint32_t mask = 0;
    for (std::size_t h = 0; h < m.size(); ++h) {
      for (int k = 0; k < m[h]; ++k) {
        mask |= std::uint32_t{1} << (report.classes[h][static_cast<std::size_t>(k)] - 1);
      }
    }
    return table.winning(mask);
  };

  VectorGame out;
  out.class_sizes = std::move(sizes);
  out.shift_min_winning = extract_shift_min(out.class_sizes, winning);
  return out;
}

ExplicitGame expand(const VectorGame& g) {
  const int n = g.n();
  if (n > kEnumerationCap) throw CapExceeded("expand is capped at 24 voters");
  const auto winning = [&](const TypeVector& m) { return is_winning_vector(g, m); };

  std::vector<TypeVector> min_types;
  for_each_grid_vector(g.class_sizes, [&](const TypeVector& m) {
    if (!winning(m)) return;
    for (std::size_t h = 0; h < m.size(); ++h) {
      if (m[h] == 0) continue;
      TypeVector smaller = m;
      --smaller[h];
      if (winning(smaller)) return;
    }
    min_types.push_back(m);
  });

  ExplicitGame out;
  out.n = n;
  std::vector<std::uint32_t> class_masks;
  {
    int v = 1;
    for (int s : g.class_sizes) {
      std::uint32_t mask = 0;
      for (int k = 0; k < s; ++k) mask |= std::uint32_t{1} << (v + k - 1);
      class_masks.push_back(mask);
      v += s;
    }
  }
  for (const auto& m : min_types) {
    // Cartesian product of the per-class voter choices.
    std::vector<std::uint32_t> partial{0};
    for (std::size_t h = 0; h < m.size(); ++h) {
      std::vector<std::uint32_t> picks;
      std::uint32_t sub = class_masks[h];
      for (;;) {
        if (std::popcount(sub) == m[h]) picks.push_back(sub);
        if (sub == 0) break;
        sub = (sub - 1) & class_masks[h];
      }
      std::vector<std::uint32_t> next;
      next.reserve(partial.size() * picks.size());
      for (std::uint32_t base : partial) {
        for (std::uint32_t pick : picks) next.push_back(base | pick);
      }
      partial = std::move(next);
    }
    for (std::uint32_t mask : partial) out.min_winning.push_back(Coalition::from_mask(n, mask));
  }
  std::sort(out.min_winning.begin(), out.min_winning.end());
  return out;
}

std::vector<VectorGame> enumerate_t2(int n) {
  if (n < 2) throw InvalidArgument("need at least two voters for two classes");
  if (n > 10) throw CapExceeded("enumerate_t2 is capped at 10 voters");

  std::vector<VectorGame> out;
  for (int n1 = 1; n1 < n; ++n1) {
    const int n2 = n - n1;
    std::vector<std::vector<TypeVector>> antichains;
    std::vector<TypeVector> chain;
    // Canonical antichains: first coordinates strictly increasing, totals
    // strictly decreasing. Every dominance antichain in two coordinates has
    // exactly one such listing.
    std::function<void(int, int)> rec = [&](int start_a1, int last_sum) {
      if (!chain.empty()) antichains.push_back(chain);
      for (int a1 = start_a1; a1 <= n1; ++a1) {
        for (int a2 = 0; a2 <= n2; ++a2) {
          if (a1 == 0 && a2 == 0) continue;
          const int s = a1 + a2;
          if (last_sum >= 0 && s >= last_sum) continue;
          chain.push_back(TypeVector{a1, a2});
          rec(a1 + 1, s);
          chain.pop_back();
        }
      }
    };
    rec(0, -1);

    for (const auto& a : antichains) {
      const auto winning = [&](const TypeVector& m) {
        return std::any_of(a.begin(), a.end(),
                           [&](const TypeVector& mw) { return dominates(m, mw); });
      };
      // Keep only games where class 1 is strictly more desirable: some
      // winning vector turns losing when a class-1 voter is traded for a
      // class-2 voter.
      bool strict = false;
      for (int m1 = 1; m1 <= n1 && !strict; ++m1) {
        for (int m2 = 0; m2 < n2; ++m2) {
          if (winning(TypeVector{m1, m2}) && !winning(TypeVector{m1 - 1, m2 + 1})) {
            strict = true;
            break;
          }
        }
      }
      if (strict) {
        VectorGame g;
        g.class_sizes = {n1, n2};
        g.shift_min_winning = a;
        out.push_back(std::move(g));
      }
    }
  }
  return out;
}

std::uint64_t count_formula_t2(int n) {
  if (n < 2) throw InvalidArgument("formula is defined for n >= 2");
  if (n > 80) throw CapExceeded("count_formula_t2 is capped at 80 voters");
  std::uint64_t a = 0, b = 1;
  for (int i = 0; i < n + 6; ++i) {
    const std::uint64_t next = a + b;
    a = b;
    b = next;
  }
  const std::uint64_t fib = a;
  const std::uint64_t poly =
      static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n) + 4u * static_cast<std::uint64_t>(n) + 8u;
  return fib - poly;
}

}  // namespace votedim
