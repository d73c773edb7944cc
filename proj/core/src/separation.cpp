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

#include "votedim/separation.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "votedim/errors.hpp"
#include "votedim/lp.hpp"
#include "votedim/structure.hpp"
#include "votedim/type_vector.hpp"
#include "votedim/vector_game.hpp"

namespace votedim {

namespace {

constexpr int kMaxGenerationRounds = 10000;

// Winning status for every cell of a vector game's type grid. Cells are
// addressed in mixed radix; the winning set is closed upward under one-step
// shifts, so a single lexicographic pass fills the table.
struct GridTable {
  std::vector<int> sizes;
  std::vector<std::size_t> strides;
  std::vector<char> winning;

  std::size_t index(const TypeVector& m) const {
    std::size_t idx = 0;
    for (std::size_t h = 0; h < m.size(); ++h) idx += static_cast<std::size_t>(m[h]) * strides[h];
    return idx;
  }
};

GridTable build_grid_table(const VectorGame& g) {
  GridTable table;
  table.sizes = g.class_sizes;
  const std::size_t cells = static_cast<std::size_t>(grid_cell_count(g.class_sizes));
  table.strides.assign(table.sizes.size(), 1);
  for (std::size_t h = table.sizes.size() - 1; h > 0; --h) {
    table.strides[h - 1] = table.strides[h] * static_cast<std::size_t>(table.sizes[h] + 1);
  }
  table.winning.assign(cells, 0);

  const std::set<TypeVector> minimal(g.shift_min_winning.begin(), g.shift_min_winning.end());
  const int t = static_cast<int>(table.sizes.size());
  for_each_grid_vector(g.class_sizes, [&](const TypeVector& m) {
    char win = minimal.count(m) ? 1 : 0;
    if (!win && m[static_cast<std::size_t>(t - 1)] > 0) {
      win = table.winning[table.index(m) - table.strides[static_cast<std::size_t>(t - 1)]];
    }
    for (int h = 0; !win && h + 1 < t; ++h) {
      if (m[static_cast<std::size_t>(h)] == 0 ||
          m[static_cast<std::size_t>(h + 1)] == table.sizes[static_cast<std::size_t>(h + 1)]) {
        continue;
      }
      win = table.winning[table.index(m) - table.strides[static_cast<std::size_t>(h)] +
                          table.strides[static_cast<std::size_t>(h + 1)]];
    }
    table.winning[table.index(m)] = win;
  });
  return table;
}

enum class RowKind { Quota, Order, Accept, Reject };

struct RowTag {
  RowKind kind;
  std::size_t index = 0;  // position in the accept/reject list
};

// Voters that every constraint treats interchangeably share one weight
// variable. Atoms refine the classes of any attached vector game and the
// membership pattern of every explicitly listed coalition, so restricting the
// search to atom-constant weights loses no solutions, while the generation
// loop can only ever produce as many distinct rows as there are per-atom count
// profiles instead of one row per coalition.
struct AtomPartition {
  int count = 0;
  std::vector<int> of;  // voter v maps to variable of[v - 1]
};

AtomPartition identity_atoms(int n) {
  AtomPartition atoms;
  atoms.count = n;
  atoms.of.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) atoms.of[static_cast<std::size_t>(v)] = v;
  return atoms;
}

AtomPartition compute_atoms(const SeparationProblem& p) {
  std::vector<std::vector<int>> keys(static_cast<std::size_t>(p.n));
  if (p.accept_vector) {
    for (int v = 1; v <= p.n; ++v) {
      keys[static_cast<std::size_t>(v - 1)].push_back(p.accept_vector->class_of(v));
    }
  }
  if (p.reject_vector) {
    for (int v = 1; v <= p.n; ++v) {
      keys[static_cast<std::size_t>(v - 1)].push_back(p.reject_vector->class_of(v));
    }
  }
  const auto refine = [&](const Coalition& c) {
    for (int v = 1; v <= p.n; ++v) {
      keys[static_cast<std::size_t>(v - 1)].push_back(c.contains(v) ? 1 : 0);
    }
  };
  for (const auto& c : p.accept) refine(c);
  for (const auto& c : p.reject) refine(c);

  AtomPartition atoms;
  atoms.of.resize(static_cast<std::size_t>(p.n));
  std::map<std::vector<int>, int> ids;
  for (int v = 0; v < p.n; ++v) {
    const auto [it, fresh] = ids.emplace(keys[static_cast<std::size_t>(v)], atoms.count);
    if (fresh) ++atoms.count;
    atoms.of[static_cast<std::size_t>(v)] = it->second;
  }
  return atoms;
}

// Order constraints survive the collapse only when they relate whole atoms:
// each listed pair must come with every other pair between the same two atoms.
bool order_pairs_atom_aligned(const std::vector<std::pair<int, int>>& pairs,
                              const AtomPartition& atoms) {
  const std::set<std::pair<int, int>> uniq(pairs.begin(), pairs.end());
  std::map<std::pair<int, int>, long long> per_block;
  for (const auto& [hi, lo] : uniq) {
    ++per_block[{atoms.of[static_cast<std::size_t>(hi - 1)],
                 atoms.of[static_cast<std::size_t>(lo - 1)]}];
  }
  std::vector<long long> size(static_cast<std::size_t>(atoms.count), 0);
  for (int a : atoms.of) ++size[static_cast<std::size_t>(a)];
  for (const auto& [block, have] : per_block) {
    const long long hi = size[static_cast<std::size_t>(block.first)];
    const long long lo = size[static_cast<std::size_t>(block.second)];
    const long long want = block.first == block.second ? hi * (hi - 1) : hi * lo;
    if (have != want) return false;
  }
  return true;
}

// Order pairs grouped by their shared lower set. Large complete-bipartite
// groups (every voter of one class above every voter of the next) go through
// one auxiliary variable x with w_a >= x >= w_b, keeping the row count linear.
struct OrderGroup {
  std::vector<int> uppers;
  std::vector<int> lowers;
  bool use_aux = false;
};

std::vector<OrderGroup> group_order_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::map<int, std::vector<int>> out;
  for (const auto& [hi, lo] : pairs) {
    if (hi < 1 || hi > n || lo < 1 || lo > n) {
      throw InvalidArgument("order constraint voter out of range");
    }
    out[hi].push_back(lo);
  }
  std::map<std::vector<int>, std::vector<int>> by_lower_set;
  for (auto& [hi, los] : out) {
    std::sort(los.begin(), los.end());
    los.erase(std::unique(los.begin(), los.end()), los.end());
    by_lower_set[los].push_back(hi);
  }
  std::vector<OrderGroup> groups;
  for (const auto& [los, his] : by_lower_set) {
    OrderGroup g;
    g.uppers = his;
    g.lowers = los;
    g.use_aux = his.size() * los.size() > his.size() + los.size();
    groups.push_back(std::move(g));
  }
  return groups;
}

struct SystemBuilder {
  // Weight variables 0 .. atoms->count - 1, then the quota, then any auxiliary
  // order variables. Coalition rows accumulate per-atom member counts.
  const AtomPartition* atoms = nullptr;
  LinearSystem sys;
  std::vector<RowTag> tags;

  std::size_t quota_col() const { return static_cast<std::size_t>(atoms->count); }

  std::vector<Rational> zero_row() const {
    return std::vector<Rational>(static_cast<std::size_t>(sys.num_vars), Rational(0));
  }

  void add_quota_row() {
    auto row = zero_row();
    row[quota_col()] = 1;
    sys.add_ge(std::move(row), Rational(1));
    tags.push_back({RowKind::Quota});
  }

  // Group indices are 1-based weight variables here, not voters.
  void add_order_rows(const std::vector<OrderGroup>& groups) {
    int next_aux = atoms->count + 1;
    for (const auto& g : groups) {
      if (g.use_aux) {
        const int x = next_aux++;
        for (int hi : g.uppers) {
          auto row = zero_row();
          row[static_cast<std::size_t>(hi - 1)] = 1;
          row[static_cast<std::size_t>(x)] = -1;
          sys.add_ge(std::move(row), Rational(0));
          tags.push_back({RowKind::Order});
        }
        for (int lo : g.lowers) {
          auto row = zero_row();
          row[static_cast<std::size_t>(x)] = 1;
          row[static_cast<std::size_t>(lo - 1)] = -1;
          sys.add_ge(std::move(row), Rational(0));
          tags.push_back({RowKind::Order});
        }
      } else {
        for (int hi : g.uppers) {
          for (int lo : g.lowers) {
            auto row = zero_row();
            row[static_cast<std::size_t>(hi - 1)] = 1;
            row[static_cast<std::size_t>(lo - 1)] = -1;
            sys.add_ge(std::move(row), Rational(0));
            tags.push_back({RowKind::Order});
          }
        }
      }
    }
  }

  void add_accept(const Coalition& a, std::size_t list_index) {
    auto row = zero_row();
    for (int v : a.members()) row[static_cast<std::size_t>(atoms->of[v - 1])] += 1;
    row[quota_col()] = -1;
    sys.add_ge(std::move(row), Rational(0));
    tags.push_back({RowKind::Accept, list_index});
  }

  void add_reject(const Coalition& r, std::size_t list_index) {
    auto row = zero_row();
    for (int v : r.members()) row[static_cast<std::size_t>(atoms->of[v - 1])] -= 1;
    row[quota_col()] = 1;
    sys.add_ge(std::move(row), Rational(1));
    tags.push_back({RowKind::Reject, list_index});
  }
};

struct ClassOrdering {
  // Voters of each class sorted by (weight, voter); prefix sums of the sorted
  // weights give O(1) cheapest/heaviest fill costs per type vector.
  std::vector<std::vector<int>> voters_asc;
  std::vector<std::vector<Rational>> prefix_asc;
  std::vector<std::vector<int>> voters_desc;
  std::vector<std::vector<Rational>> prefix_desc;
};

ClassOrdering order_classes(const VectorGame& g, const std::vector<Rational>& weights) {
  ClassOrdering ord;
  for (int h = 1; h <= g.t(); ++h) {
    std::vector<int> asc = g.class_members(h).members();
    std::sort(asc.begin(), asc.end(), [&](int a, int b) {
      const Rational& wa = weights[static_cast<std::size_t>(a - 1)];
      const Rational& wb = weights[static_cast<std::size_t>(b - 1)];
      return wa != wb ? wa < wb : a < b;
    });
    const std::vector<int> desc(asc.rbegin(), asc.rend());
    std::vector<Rational> pa{Rational(0)}, pd{Rational(0)};
    for (int v : asc) pa.push_back(pa.back() + weights[static_cast<std::size_t>(v - 1)]);
    for (int v : desc) pd.push_back(pd.back() + weights[static_cast<std::size_t>(v - 1)]);
    ord.voters_asc.push_back(std::move(asc));
    ord.prefix_asc.push_back(std::move(pa));
    ord.voters_desc.push_back(desc);
    ord.prefix_desc.push_back(std::move(pd));
  }
  return ord;
}

Coalition fill_coalition(int n, const std::vector<std::vector<int>>& order, const TypeVector& m) {
  Coalition c(n);
  for (std::size_t h = 0; h < m.size(); ++h) {
    for (int k = 0; k < m[h]; ++k) c.add(order[h][static_cast<std::size_t>(k)]);
  }
  return c;
}

void check_problem(const SeparationProblem& p) {
  if (p.n < 1 || p.n > kMaxVoters) throw InvalidArgument("voter count out of range");
  for (const auto& c : p.accept) {
    if (c.n() != p.n) throw InvalidArgument("accept coalition sized to a different game");
  }
  for (const auto& c : p.reject) {
    if (c.n() != p.n) throw InvalidArgument("reject coalition sized to a different game");
  }
  if (p.accept_vector && p.accept_vector->n() != p.n) {
    throw InvalidArgument("accept_vector sized to a different game");
  }
  if (p.reject_vector && p.reject_vector->n() != p.n) {
    throw InvalidArgument("reject_vector sized to a different game");
  }
  for (const auto& [hi, lo] : p.order_constraints) {
    if (hi < 1 || hi > p.n || lo < 1 || lo > p.n) {
      throw InvalidArgument("order constraint voter out of range");
    }
  }
}

}  // namespace

SeparationOutcome solve_separation(const SeparationProblem& problem) {
  check_problem(problem);

  std::vector<Coalition> accepts = problem.accept;
  std::vector<Coalition> rejects = problem.reject;
  std::set<Coalition> accept_seen(accepts.begin(), accepts.end());

  if (problem.accept_vector) {
    const VectorGame& g = *problem.accept_vector;
    std::vector<std::vector<int>> plain;
    for (int h = 1; h <= g.t(); ++h) plain.push_back(g.class_members(h).members());
    for (const auto& m : g.shift_min_winning) {
      Coalition seed = fill_coalition(problem.n, plain, m);
      if (accept_seen.insert(seed).second) accepts.push_back(std::move(seed));
    }
  }

  std::optional<GridTable> accept_grid, reject_grid;
  if (problem.accept_vector) accept_grid = build_grid_table(*problem.accept_vector);
  if (problem.reject_vector) reject_grid = build_grid_table(*problem.reject_vector);

  AtomPartition atoms = compute_atoms(problem);
  if (atoms.count < problem.n && !order_pairs_atom_aligned(problem.order_constraints, atoms)) {
    atoms = identity_atoms(problem.n);
  }

  // Order pairs restated between weight variables; pairs inside one atom hold
  // automatically and drop out.
  std::set<std::pair<int, int>> variable_pairs;
  for (const auto& [hi, lo] : problem.order_constraints) {
    const int a = atoms.of[static_cast<std::size_t>(hi - 1)] + 1;
    const int b = atoms.of[static_cast<std::size_t>(lo - 1)] + 1;
    if (a != b) variable_pairs.emplace(a, b);
  }
  const std::vector<OrderGroup> order_groups = group_order_pairs(
      atoms.count, {variable_pairs.begin(), variable_pairs.end()});
  int aux = 0;
  for (const auto& g : order_groups) {
    if (g.use_aux) ++aux;
  }

  for (int round = 0; round < kMaxGenerationRounds; ++round) {
    SystemBuilder b;
    b.atoms = &atoms;
    b.sys.num_vars = atoms.count + 1 + aux;
    b.sys.nonneg.assign(static_cast<std::size_t>(b.sys.num_vars), 1);
    b.add_quota_row();
    b.add_order_rows(order_groups);
    for (std::size_t i = 0; i < accepts.size(); ++i) b.add_accept(accepts[i], i);
    for (std::size_t i = 0; i < rejects.size(); ++i) b.add_reject(rejects[i], i);

    if (std::getenv("VOTEDIM_TRACE_SEP")) {
      std::fprintf(stderr, "round %d: atoms=%d accepts=%zu rejects=%zu\n", round, atoms.count,
                   accepts.size(), rejects.size());
    }
    const LpResult lp = solve_feasibility(b.sys);

    if (!lp.feasible) {
      SeparationOutcome out;
      out.feasible = false;
      bool order_involved = false;
      for (std::size_t r = 0; r < b.tags.size(); ++r) {
        if (sgn(lp.farkas[r]) == 0) continue;
        switch (b.tags[r].kind) {
          case RowKind::Accept:
            out.accept_multipliers.emplace_back(accepts[b.tags[r].index], lp.farkas[r]);
            break;
          case RowKind::Reject:
            out.reject_multipliers.emplace_back(rejects[b.tags[r].index], lp.farkas[r]);
            break;
          case RowKind::Order:
            order_involved = true;
            break;
          case RowKind::Quota:
            break;
        }
      }
      if (order_involved) {
        out.accept_multipliers.clear();
        out.reject_multipliers.clear();
      }
      return out;
    }

    std::vector<Rational> weights;
    weights.reserve(static_cast<std::size_t>(problem.n));
    for (int v = 0; v < problem.n; ++v) {
      weights.push_back(lp.point[static_cast<std::size_t>(atoms.of[static_cast<std::size_t>(v)])]);
    }
    Rational quota = lp.point[static_cast<std::size_t>(atoms.count)];

    bool violated = false;
    if (problem.accept_vector) {
      const VectorGame& g = *problem.accept_vector;
      const ClassOrdering ord = order_classes(g, weights);
      bool found = false;
      Rational best_cost;
      TypeVector best_m;
      for_each_grid_vector(g.class_sizes, [&](const TypeVector& m) {
        if (!accept_grid->winning[accept_grid->index(m)]) return;
        Rational cost(0);
        for (std::size_t h = 0; h < m.size(); ++h) {
          cost += ord.prefix_asc[h][static_cast<std::size_t>(m[h])];
        }
        if (cost < quota && (!found || cost < best_cost)) {
          found = true;
          best_cost = std::move(cost);
          best_m = m;
        }
      });
      if (found) {
        Coalition add = fill_coalition(problem.n, ord.voters_asc, best_m);
        if (!accept_seen.insert(add).second) {
          throw std::logic_error("constraint generation repeated an accept row");
        }
        accepts.push_back(std::move(add));
        violated = true;
      }
    }
    if (!violated && problem.reject_vector) {
      const VectorGame& g = *problem.reject_vector;
      const ClassOrdering ord = order_classes(g, weights);
      const Rational limit = quota - 1;
      bool found = false;
      Rational best_cost;
      TypeVector best_m;
      for_each_grid_vector(g.class_sizes, [&](const TypeVector& m) {
        if (reject_grid->winning[reject_grid->index(m)]) return;
        Rational cost(0);
        for (std::size_t h = 0; h < m.size(); ++h) {
          cost += ord.prefix_desc[h][static_cast<std::size_t>(m[h])];
        }
        if (cost > limit && (!found || cost > best_cost)) {
          found = true;
          best_cost = std::move(cost);
          best_m = m;
        }
      });
      if (found) {
        rejects.push_back(fill_coalition(problem.n, ord.voters_desc, best_m));
        violated = true;
      }
    }

    if (!violated) {
      SeparationOutcome out;
      out.feasible = true;
      out.solution = RationalSolution{std::move(quota), std::move(weights)};
      return out;
    }
  }
  throw CapExceeded("separation constraint generation did not converge");
}

std::optional<RationalSolution> lp_feasible(const SeparationProblem& problem) {
  return solve_separation(problem).solution;
}

namespace {

WeightedGame to_weighted(const RationalSolution& sol) {
  WeightedGame g;
  g.quota = sol.quota;
  g.weights = sol.weights;
  return g;
}

}  // namespace

std::optional<WeightedGame> is_weighted(const Game& g) {
  SeparationProblem p;
  p.n = g.n();
  if (g.is_vector()) {
    p.accept_vector = g.as_vector();
    p.reject_vector = g.as_vector();
  } else {
    p.accept = minimal_winning(g);
    p.reject = maximal_losing(g);
  }
  const auto sol = lp_feasible(p);
  if (!sol) return std::nullopt;
  return to_weighted(*sol);
}

std::optional<WeightedGame> separate(const Game& g, const std::vector<Coalition>& losing) {
  for (const auto& c : losing) {
    if (evaluate(g, c)) throw InvalidArgument("coalition to reject is winning");
  }
  SeparationProblem p;
  p.n = g.n();
  p.reject = losing;
  if (g.is_vector()) {
    p.accept_vector = g.as_vector();
  } else {
    p.accept = minimal_winning(g);
  }
  const auto sol = lp_feasible(p);
  if (!sol) return std::nullopt;
  return to_weighted(*sol);
}

std::optional<WeightedGame> ordered_separate(const VectorGame& g, const Coalition& losing) {
  if (evaluate(Game(g), losing)) throw InvalidArgument("coalition to reject is winning");
  SeparationProblem p;
  p.n = g.n();
  p.accept_vector = g;
  p.reject = {losing};
  for (int h = 1; h + 1 <= g.t(); ++h) {
    const auto upper = g.class_members(h).members();
    const auto lower = g.class_members(h + 1).members();
    for (int a : upper) {
      for (int b : lower) p.order_constraints.emplace_back(a, b);
    }
  }
  const auto sol = lp_feasible(p);
  if (!sol) return std::nullopt;
  return to_weighted(*sol);
}

}  // namespace votedim
