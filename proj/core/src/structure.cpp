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

#include "votedim/structure.hpp"

#include <algorithm>
#include <optional>

#include "votedim/errors.hpp"

namespace votedim {

namespace {

std::vector<Coalition> masks_to_coalitions(int n, const std::vector<std::uint32_t>& masks) {
  std::vector<Coalition> out;
  out.reserve(masks.size());
  for (std::uint32_t m : masks) out.push_back(Coalition::from_mask(n, m));
  return out;
}

}  // namespace

std::vector<Coalition> minimal_winning(const Game& game) {
  if (game.is_explicit()) {
    auto out = game.as_explicit().min_winning;
    std::sort(out.begin(), out.end());
    return out;
  }
  const WinningTable table = WinningTable::build(game);
  std::vector<std::uint32_t> masks;
  for (std::uint32_t mask = 0; mask < table.mask_count(); ++mask) {
    if (!table.winning(mask)) continue;
    bool minimal = true;
    std::uint32_t bits = mask;
    while (bits != 0) {
      const std::uint32_t low = bits & (0u - bits);
      if (table.winning(mask ^ low)) {
        minimal = false;
        break;
      }
      bits ^= low;
    }
    if (minimal) masks.push_back(mask);
  }
  return masks_to_coalitions(table.n(), masks);
}

std::vector<Coalition> maximal_losing(const Game& game) {
  const WinningTable table = WinningTable::build(game);
  const std::uint32_t all = table.mask_count() - 1;
  std::vector<std::uint32_t> masks;
  for (std::uint32_t mask = 0; mask < table.mask_count(); ++mask) {
    if (table.winning(mask)) continue;
    bool maximal = true;
    std::uint32_t bits = all & ~mask;
    while (bits != 0) {
      const std::uint32_t low = bits & (0u - bits);
      if (!table.winning(mask | low)) {
        maximal = false;
        break;
      }
      bits ^= low;
    }
    if (maximal) masks.push_back(mask);
  }
  return masks_to_coalitions(table.n(), masks);
}

namespace {

DesirabilityReport vector_game_desirability(const VectorGame& g) {
  DesirabilityReport report;
  report.n = g.n();
  report.complete = true;
  report.relation.assign(static_cast<std::size_t>(report.n),
                         std::vector<Relation>(static_cast<std::size_t>(report.n)));
  for (int i = 1; i <= report.n; ++i) {
    for (int j = 1; j <= report.n; ++j) {
      const int ci = g.class_of(i), cj = g.class_of(j);
      report.relation[i - 1][j - 1] = ci == cj  ? Relation::Equivalent
                                      : ci < cj ? Relation::StrictlyMore
                                                : Relation::StrictlyLess;
    }
  }
  for (int h = 1; h <= g.t(); ++h) {
    report.classes.push_back(g.class_members(h).members());
  }
  return report;
}

// One pass over the subsets of N \ {i, j} decides both directions of the
// pairwise comparison.
void compare_pair(const WinningTable& table, int i, int j, bool& i_geq_j, bool& j_geq_i) {
  const std::uint32_t bi = std::uint32_t{1} << (i - 1);
  const std::uint32_t bj = std::uint32_t{1} << (j - 1);
  const std::uint32_t comp = (table.mask_count() - 1) & ~(bi | bj);
  i_geq_j = j_geq_i = true;
  std::uint32_t sub = comp;
  for (;;) {
    const bool wi = table.winning(sub | bi);
    const bool wj = table.winning(sub | bj);
    if (wj && !wi) i_geq_j = false;
    if (wi && !wj) j_geq_i = false;
    if (!i_geq_j && !j_geq_i) return;
    if (sub == 0) break;
    sub = (sub - 1) & comp;
  }
}

}  // namespace

DesirabilityReport desirability(const Game& game) {
  if (game.is_vector()) return vector_game_desirability(game.as_vector());

  const WinningTable table = WinningTable::build(game);
  const int n = table.n();
  DesirabilityReport report;
  report.n = n;
  report.complete = true;
  report.relation.assign(static_cast<std::size_t>(n),
                         std::vector<Relation>(static_cast<std::size_t>(n), Relation::Equivalent));
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      bool ij = false, ji = false;
      compare_pair(table, i, j, ij, ji);
      Relation rij = ij && ji   ? Relation::Equivalent
                     : ij       ? Relation::StrictlyMore
                     : ji       ? Relation::StrictlyLess
                                : Relation::Incomparable;
      report.relation[i - 1][j - 1] = rij;
      report.relation[j - 1][i - 1] = rij == Relation::StrictlyMore  ? Relation::StrictlyLess
                                      : rij == Relation::StrictlyLess ? Relation::StrictlyMore
                                                                      : rij;
      if (rij == Relation::Incomparable) report.complete = false;
    }
  }

  // Group mutually equivalent voters; order classes by desirability when that
  // order is total, else by smallest member.
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (int i = 1; i <= n; ++i) {
    if (used[i - 1]) continue;
    std::vector<int> cls{i};
    used[i - 1] = true;
    for (int j = i + 1; j <= n; ++j) {
      if (!used[j - 1] && report.relation[i - 1][j - 1] == Relation::Equivalent) {
        cls.push_back(j);
        used[j - 1] = true;
      }
    }
    report.classes.push_back(std::move(cls));
  }
  if (report.complete) {
    std::sort(report.classes.begin(), report.classes.end(),
              [&](const std::vector<int>& a, const std::vector<int>& b) {
                return report.relation[a.front() - 1][b.front() - 1] == Relation::StrictlyMore;
              });
  }
  return report;
}

CompletenessResult is_complete(const Game& game) {
  const DesirabilityReport report = desirability(game);
  return CompletenessResult{report.complete, report.classes};
}

namespace {

WeightedGame dual_weighted(const WeightedGame& g) {
  // With integer weights W and quota Q, "complement loses" means
  // W(N) - W(S) <= Q - 1, i.e. W(S) >= W(N) - Q + 1.
  std::vector<Rational> all = g.weights;
  all.push_back(g.quota);
  const std::vector<Integer> ints = clear_denominators(all);
  WeightedGame out;
  out.weights.reserve(g.weights.size());
  Integer total = 0;
  for (std::size_t i = 0; i + 1 < ints.size(); ++i) {
    out.weights.push_back(Rational(ints[i]));
    total += ints[i];
  }
  out.quota = Rational(total - ints.back() + 1);
  return out;
}

VectorGame dual_vector(const VectorGame& g) {
  const auto wins = [&](const TypeVector& m) {
    for (const auto& mw : g.shift_min_winning) {
      if (dominates(m, mw)) return true;
    }
    return false;
  };
  const auto dual_wins = [&](const TypeVector& m) {
    TypeVector comp(m.size());
    for (std::size_t h = 0; h < m.size(); ++h) {
      comp[h] = g.class_sizes[h] - m[h];
    }
    return !wins(comp);
  };
  // Collect the shift-minimal winning vectors of the dual: winning, and every
  // one-step descent in the shift order (drop a weakest voter, or trade a
  // voter for one of the next class) loses.
  VectorGame out;
  out.class_sizes = g.class_sizes;
  for_each_grid_vector(g.class_sizes, [&](const TypeVector& m) {
    if (!dual_wins(m)) return;
    const int t = static_cast<int>(m.size());
    if (m[static_cast<std::size_t>(t - 1)] > 0) {
      TypeVector down = m;
      --down[static_cast<std::size_t>(t - 1)];
      if (dual_wins(down)) return;
    }
    for (int h = 0; h + 1 < t; ++h) {
      if (m[static_cast<std::size_t>(h)] == 0 ||
          m[static_cast<std::size_t>(h + 1)] == g.class_sizes[static_cast<std::size_t>(h + 1)]) {
        continue;
      }
      TypeVector shifted = m;
      --shifted[static_cast<std::size_t>(h)];
      ++shifted[static_cast<std::size_t>(h + 1)];
      if (dual_wins(shifted)) return;
    }
    out.shift_min_winning.push_back(m);
  });
  return out;
}

}  // namespace

Game dual(const Game& game) {
  return std::visit(
      [&](const auto& g) -> Game {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, WeightedGame>) {
          return dual_weighted(g);
        } else if constexpr (std::is_same_v<T, VectorGame>) {
          return dual_vector(g);
        } else if constexpr (std::is_same_v<T, Combination>) {
          Combination out;
          out.op = g.op == BoolOp::And ? BoolOp::Or : BoolOp::And;
          out.parts.reserve(g.parts.size());
          for (const auto& part : g.parts) out.parts.push_back(dual(part));
          return out;
        } else {
          // Complements of the maximal losing coalitions are exactly the
          // minimal winning coalitions of the dual.
          ExplicitGame out;
          out.n = g.n;
          for (const auto& t : maximal_losing(game)) {
            out.min_winning.push_back(t.complement());
          }
          std::sort(out.min_winning.begin(), out.min_winning.end());
          return out;
        }
      },
      game.repr());
}

namespace {

struct Block {
  int first = 0;  // 1-based, inclusive
  int last = 0;
};

std::vector<Block> blocks_of_sizes(const std::vector<int>& sizes) {
  std::vector<Block> out;
  int v = 1;
  for (int s : sizes) {
    out.push_back(Block{v, v + s - 1});
    v += s;
  }
  return out;
}

// True when the game's outcome provably depends only on how many voters a
// coalition takes from each block.
bool uniform_on(const Game& game, const std::vector<Block>& blocks) {
  return std::visit(
      [&](const auto& g) -> bool {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, WeightedGame>) {
          for (const auto& b : blocks) {
            for (int v = b.first + 1; v <= b.last; ++v) {
              if (g.weights[static_cast<std::size_t>(v - 1)] !=
                  g.weights[static_cast<std::size_t>(b.first - 1)]) {
                return false;
              }
            }
          }
          return true;
        } else if constexpr (std::is_same_v<T, VectorGame>) {
          // Sufficient: every block lies inside one of the game's classes.
          const auto own = blocks_of_sizes(g.class_sizes);
          for (const auto& b : blocks) {
            const bool inside = std::any_of(own.begin(), own.end(), [&](const Block& o) {
              return o.first <= b.first && b.last <= o.last;
            });
            if (!inside) return false;
          }
          return true;
        } else if constexpr (std::is_same_v<T, Combination>) {
          return std::all_of(g.parts.begin(), g.parts.end(),
                             [&](const Game& p) { return uniform_on(p, blocks); });
        } else {
          return false;
        }
      },
      game.repr());
}

bool equal_on_grid(const Game& a, const Game& b, const std::vector<int>& sizes) {
  const auto blocks = blocks_of_sizes(sizes);
  const int n = a.n();
  bool equal = true;
  for_each_grid_vector(sizes, [&](const TypeVector& m) {
    if (!equal) return;
    Coalition rep(n);
    for (std::size_t h = 0; h < blocks.size(); ++h) {
      for (int v = blocks[h].first; v < blocks[h].first + m[h]; ++v) rep.add(v);
    }
    if (evaluate(a, rep) != evaluate(b, rep)) equal = false;
  });
  return equal;
}

}  // namespace

bool games_equal(const Game& a, const Game& b) {
  if (a.n() != b.n()) return false;
  if (a.n() <= kEnumerationCap) {
    return WinningTable::build(a) == WinningTable::build(b);
  }
  for (const Game* vg : {&a, &b}) {
    if (!vg->is_vector()) continue;
    const auto& sizes = vg->as_vector().class_sizes;
    const auto blocks = blocks_of_sizes(sizes);
    if (uniform_on(a, blocks) && uniform_on(b, blocks)) {
      return equal_on_grid(a, b, sizes);
    }
  }
  throw CapExceeded(
      "equality beyond 24 voters requires both games to be uniform on a "
      "common class partition");
}

Game add_null_voters(const Game& game, int count) {
  if (count < 0) throw InvalidArgument("cannot add a negative number of voters");
  if (game.n() + count > kMaxVoters) throw InvalidArgument("resulting game exceeds 128 voters");
  if (count == 0) return game;
  return std::visit(
      [&](const auto& g) -> Game {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, ExplicitGame>) {
          ExplicitGame out;
          out.n = g.n + count;
          for (const auto& w : g.min_winning) {
            out.min_winning.push_back(Coalition::from_members(out.n, w.members()));
          }
          return out;
        } else if constexpr (std::is_same_v<T, WeightedGame>) {
          WeightedGame out = g;
          out.weights.insert(out.weights.end(), static_cast<std::size_t>(count), Rational(0));
          return out;
        } else if constexpr (std::is_same_v<T, VectorGame>) {
          VectorGame out = g;
          const bool last_class_null =
              std::all_of(g.shift_min_winning.begin(), g.shift_min_winning.end(),
                          [](const TypeVector& m) { return m.back() == 0; });
          if (last_class_null) {
            out.class_sizes.back() += count;
          } else {
            out.class_sizes.push_back(count);
            for (auto& m : out.shift_min_winning) m.push_back(0);
          }
          return out;
        } else {
          Combination out;
          out.op = g.op;
          for (const auto& part : g.parts) out.parts.push_back(add_null_voters(part, count));
          return out;
        }
      },
      game.repr());
}

}  // namespace votedim
