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

#include "votedim/dimension.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <map>
#include <thread>
#include <utility>
#include <vector>

#include "votedim/clique.hpp"
#include "votedim/errors.hpp"
#include "votedim/separation.hpp"
#include "votedim/structure.hpp"
#include "votedim/winning_table.hpp"

namespace votedim {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
  std::optional<Clock::time_point> at;

  static Deadline from_budget(const std::optional<double>& seconds) {
    Deadline d;
    if (seconds) {
      d.at = Clock::now() +
             std::chrono::duration_cast<Clock::duration>(
                 std::chrono::duration<double>(*seconds));
    }
    return d;
  }

  bool expired() const { return at && Clock::now() >= *at; }
};

/// Internal control flow: unwinds to the public entry point, which reports
/// whatever bounds were finished.
struct BudgetExpired {};

void check(const Deadline& deadline) {
  if (deadline.expired()) throw BudgetExpired{};
}

int clamp_threads(int threads) {
  const int hw = static_cast<int>(std::thread::hardware_concurrency());
  return std::max(1, std::min(threads, hw > 0 ? hw : 1));
}

/// The accept side of every separation question about g, set up once.
SeparationProblem base_problem(const Game& g) {
  SeparationProblem p;
  p.n = g.n();
  if (g.is_vector()) {
    p.accept_vector = g.as_vector();
  } else {
    p.accept = minimal_winning(g);
  }
  return p;
}

/// LP feasibility of rejecting all listed coalitions at once, with the
/// verdict cached by vertex-id set. Not thread safe.
class GroupOracle {
 public:
  GroupOracle(const Game& g, const std::vector<Coalition>& vertices,
              Deadline deadline)
      : base_(base_problem(g)), vertices_(vertices), deadline_(deadline) {}

  bool feasible(const std::vector<int>& ids) {
    const auto it = memo_.find(ids);
    if (it != memo_.end()) return it->second;
    check(deadline_);
    const bool verdict = lp_feasible(make_problem(ids)).has_value();
    memo_.emplace(ids, verdict);
    return verdict;
  }

  WeightedGame witness(const std::vector<int>& ids) const {
    const auto solution = lp_feasible(make_problem(ids));
    if (!solution) {
      throw std::logic_error("witness requested for an infeasible group");
    }
    return WeightedGame{solution->quota, solution->weights};
  }

 private:
  SeparationProblem make_problem(const std::vector<int>& ids) const {
    SeparationProblem p = base_;
    p.reject.clear();
    for (int id : ids) p.reject.push_back(vertices_[static_cast<std::size_t>(id)]);
    return p;
  }

  SeparationProblem base_;
  const std::vector<Coalition>& vertices_;
  Deadline deadline_;
  std::map<std::vector<int>, bool> memo_;
};

/// Length-2 certificate probe: some redistribution of the two losing
/// coalitions' voters into two winning coalitions rules out any common
/// rejecting weighted game. Skipped when the symmetric difference is too
/// large to enumerate quickly.
bool short_certificate_conflict(const WinningTable& table, const Coalition& a,
                                const Coalition& b) {
  constexpr int kMaxDelta = 16;
  const std::uint32_t ma = static_cast<std::uint32_t>(a.to_mask());
  const std::uint32_t mb = static_cast<std::uint32_t>(b.to_mask());
  const std::uint32_t common = ma & mb;
  const std::uint32_t delta = ma ^ mb;
  if (std::popcount(delta) > kMaxDelta) return false;
  std::uint32_t part = 0;
  for (;;) {
    if (table.winning(common | part) && table.winning(common | (delta & ~part))) {
      return true;
    }
    if (part == delta) return false;
    part = (part - delta) & delta;
  }
}

/// Two pairs with the same per-class count pattern (sizes of T_i, T_j and
/// their intersection inside each equivalence class) are mapped to each other
/// by a permutation of equivalent voters, which preserves the game, so one LP
/// verdict covers the whole bucket.
std::vector<int> pair_signature(const Coalition& a, const Coalition& b,
                                const std::vector<Coalition>& class_masks) {
  std::vector<int> fwd, rev;
  fwd.reserve(class_masks.size() * 3);
  rev.reserve(class_masks.size() * 3);
  for (const Coalition& cm : class_masks) {
    const int ca = a.intersected(cm).size();
    const int cb = b.intersected(cm).size();
    const int ab = a.intersected(b).intersected(cm).size();
    fwd.insert(fwd.end(), {ca, cb, ab});
    rev.insert(rev.end(), {cb, ca, ab});
  }
  return std::min(fwd, rev);
}

ConflictGraph conflict_graph_impl(const Game& g, int threads,
                                  const Deadline& deadline) {
  const int n = g.n();
  if (n > kEnumerationCap) {
    throw CapExceeded("conflict_graph supports at most 24 voters");
  }
  ConflictGraph cg;
  cg.vertices = maximal_losing(g);
  const int m = static_cast<int>(cg.vertices.size());
  if (m > kConflictGraphMaxLosing) {
    throw CapExceeded("conflict_graph supports at most 500 maximal losing coalitions");
  }
  cg.adjacency.assign(static_cast<std::size_t>(m), std::vector<char>(static_cast<std::size_t>(m), 0));
  if (m < 2) return cg;

  const DesirabilityReport des = desirability(g);
  std::vector<Coalition> class_masks;
  for (const auto& cl : des.classes) {
    class_masks.push_back(Coalition::from_members(n, cl));
  }

  std::map<std::vector<int>, std::vector<std::pair<int, int>>> buckets;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      buckets[pair_signature(cg.vertices[static_cast<std::size_t>(i)],
                             cg.vertices[static_cast<std::size_t>(j)], class_masks)]
          .emplace_back(i, j);
    }
  }

  std::vector<std::pair<int, int>> reps;
  std::vector<const std::vector<std::pair<int, int>>*> bucket_pairs;
  reps.reserve(buckets.size());
  for (const auto& [key, pairs] : buckets) {
    reps.push_back(pairs.front());
    bucket_pairs.push_back(&pairs);
  }

  const WinningTable table = WinningTable::build(g);
  const SeparationProblem base = base_problem(g);
  const auto conflicts = [&](const std::pair<int, int>& pr) {
    const Coalition& a = cg.vertices[static_cast<std::size_t>(pr.first)];
    const Coalition& b = cg.vertices[static_cast<std::size_t>(pr.second)];
    if (short_certificate_conflict(table, a, b)) return true;
    SeparationProblem p = base;
    p.reject = {a, b};
    return !lp_feasible(p).has_value();
  };

  std::vector<char> edge(reps.size(), 0);
  const int workers = std::min<int>(clamp_threads(threads), static_cast<int>(reps.size()));
  std::atomic<bool> expired{false};
  if (workers <= 1) {
    for (std::size_t r = 0; r < reps.size(); ++r) {
      check(deadline);
      edge[r] = conflicts(reps[r]) ? 1 : 0;
    }
  } else {
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&]() {
        for (;;) {
          const std::size_t r = next.fetch_add(1);
          if (r >= reps.size() || expired.load()) return;
          if (deadline.expired()) {
            expired.store(true);
            return;
          }
          edge[r] = conflicts(reps[r]) ? 1 : 0;
        }
      });
    }
    for (auto& th : pool) th.join();
    if (expired.load()) throw BudgetExpired{};
  }

  for (std::size_t r = 0; r < reps.size(); ++r) {
    if (!edge[r]) continue;
    for (const auto& [i, j] : *bucket_pairs[r]) {
      cg.adjacency[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
      cg.adjacency[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = 1;
    }
  }
  return cg;
}

struct UnitClassGroups {
  std::vector<WeightedGame> games;
  std::vector<std::vector<int>> members;  // vertex ids per game
};

UnitClassGroups unit_class_groups(int n, const Coalition& class_mask,
                                  const std::vector<Coalition>& mls) {
  UnitClassGroups out;
  std::map<std::pair<Coalition, int>, std::size_t> seen;
  for (std::size_t idx = 0; idx < mls.size(); ++idx) {
    const Coalition& s = mls[idx];
    const int a = s.intersected(class_mask).size();
    const Coalition rest = s.minus(class_mask);
    const auto key = std::make_pair(rest, a);
    auto it = seen.find(key);
    if (it == seen.end()) {
      WeightedGame game;
      game.quota = a + 1;
      game.weights.reserve(static_cast<std::size_t>(n));
      for (int v = 1; v <= n; ++v) {
        if (class_mask.contains(v)) {
          game.weights.emplace_back(1);
        } else if (rest.contains(v)) {
          game.weights.emplace_back(0);
        } else {
          game.weights.emplace_back(a + 1);
        }
      }
      it = seen.emplace(key, out.games.size()).first;
      out.games.push_back(std::move(game));
      out.members.emplace_back();
    }
    out.members[it->second].push_back(static_cast<int>(idx));
  }
  return out;
}

std::vector<int> merged_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool has_internal_edge(const ConflictGraph& cg, const std::vector<int>& a,
                       const std::vector<int>& b) {
  for (int i : a) {
    for (int j : b) {
      if (cg.adjacency[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) return true;
    }
  }
  return false;
}

/// Repeatedly merges the first group pair whose union is still co-rejectable
/// until no merge applies or the target size is reached.
void merge_refine(const ConflictGraph& cg, GroupOracle& oracle, int target,
                  std::vector<std::vector<int>>& groups) {
  bool merged = true;
  while (merged && static_cast<int>(groups.size()) > target) {
    merged = false;
    for (std::size_t i = 0; i < groups.size() && !merged; ++i) {
      for (std::size_t j = i + 1; j < groups.size() && !merged; ++j) {
        if (has_internal_edge(cg, groups[i], groups[j])) continue;
        std::vector<int> both = merged_sorted(groups[i], groups[j]);
        if (oracle.feasible(both)) {
          groups[i] = std::move(both);
          groups.erase(groups.begin() + static_cast<std::ptrdiff_t>(j));
          merged = true;
        }
      }
    }
  }
}

/// Depth-first assignment of the remaining vertices (colex order) to at most
/// k groups. Clique vertices are pre-placed in distinct groups, which is
/// sound because they must be pairwise separated; new groups are only opened
/// in first-empty order.
class GroupSearch {
 public:
  GroupSearch(const ConflictGraph& cg, GroupOracle& oracle, Deadline deadline,
              const std::vector<int>& clique, int k)
      : cg_(cg), oracle_(oracle), deadline_(deadline), k_(k) {
    std::vector<char> seeded(cg.vertices.size(), 0);
    for (int v : clique) {
      groups_.push_back({v});
      seeded[static_cast<std::size_t>(v)] = 1;
    }
    for (std::size_t v = 0; v < cg.vertices.size(); ++v) {
      if (!seeded[v]) rest_.push_back(static_cast<int>(v));
    }
  }

  std::optional<std::vector<std::vector<int>>> run() {
    if (static_cast<int>(groups_.size()) > k_) return std::nullopt;
    if (dfs(0)) return groups_;
    return std::nullopt;
  }

 private:
  bool dfs(std::size_t pos) {
    check(deadline_);
    if (pos == rest_.size()) return true;
    const int v = rest_[pos];
    const std::vector<int> solo{v};
    for (std::size_t gi = 0; gi < groups_.size(); ++gi) {
      if (has_internal_edge(cg_, groups_[gi], solo)) continue;
      std::vector<int> extended = merged_sorted(groups_[gi], solo);
      if (!oracle_.feasible(extended)) continue;
      std::vector<int> saved = std::move(groups_[gi]);
      groups_[gi] = std::move(extended);
      if (dfs(pos + 1)) return true;
      groups_[gi] = std::move(saved);
    }
    if (static_cast<int>(groups_.size()) < k_) {
      groups_.push_back(solo);
      if (dfs(pos + 1)) return true;
      groups_.pop_back();
    }
    return false;
  }

  const ConflictGraph& cg_;
  GroupOracle& oracle_;
  Deadline deadline_;
  int k_;
  std::vector<std::vector<int>> groups_;
  std::vector<int> rest_;
};

std::vector<WeightedGame> group_witnesses(const GroupOracle& oracle,
                                          const std::vector<std::vector<int>>& groups) {
  std::vector<WeightedGame> out;
  out.reserve(groups.size());
  for (const auto& ids : groups) out.push_back(oracle.witness(ids));
  return out;
}

void compute_exact(const Game& g, const DimensionOptions& options,
                   const Deadline& deadline, DimensionReport& report) {
  const DesirabilityReport des = desirability(g);
  const std::vector<Coalition> mls = maximal_losing(g);
  report.upper_maxlosing = static_cast<int>(mls.size());

  std::optional<UnitClassGroups> best_groups;
  for (std::size_t c = 0; c < des.classes.size(); ++c) {
    UnitClassGroups groups = unit_class_groups(
        g.n(), Coalition::from_members(g.n(), des.classes[c]), mls);
    if (!best_groups || groups.games.size() < best_groups->games.size()) {
      best_groups = std::move(groups);
    }
  }
  report.upper_unit_class = static_cast<int>(best_groups->games.size());

  check(deadline);
  if (const auto weighted = is_weighted(g)) {
    report.lower_clique = 1;
    report.clique_witness = {mls.front()};
    report.exact = 1;
    report.witness_representation = std::vector<WeightedGame>{*weighted};
    return;
  }

  const ConflictGraph cg = conflict_graph_impl(g, options.threads, deadline);
  const CliqueResult clique = max_clique(cg.adjacency);
  report.lower_clique = static_cast<int>(clique.members.size());
  report.clique_witness.clear();
  for (int v : clique.members) {
    report.clique_witness.push_back(cg.vertices[static_cast<std::size_t>(v)]);
  }

  if (report.lower_clique == report.upper_unit_class) {
    report.exact = report.lower_clique;
    report.witness_representation = best_groups->games;
    return;
  }

  GroupOracle oracle(g, cg.vertices, deadline);
  std::vector<std::vector<int>> groups = best_groups->members;
  for (auto& ids : groups) std::sort(ids.begin(), ids.end());
  merge_refine(cg, oracle, report.lower_clique, groups);

  if (static_cast<int>(groups.size()) == report.lower_clique) {
    report.exact = static_cast<int>(groups.size());
    report.witness_representation = group_witnesses(oracle, groups);
    return;
  }

  if (report.upper_maxlosing > kGroupSearchMaxLosing) {
    // Too many coalitions for the exhaustive grouping search; the bounds
    // above are all this report can certify.
    return;
  }

  for (int k = report.lower_clique; k < static_cast<int>(groups.size()); ++k) {
    GroupSearch search(cg, oracle, deadline, clique.members, k);
    if (const auto found = search.run()) {
      report.exact = k;
      report.witness_representation = group_witnesses(oracle, *found);
      return;
    }
  }
  report.exact = static_cast<int>(groups.size());
  report.witness_representation = group_witnesses(oracle, groups);
}

}  // namespace

std::vector<std::pair<int, int>> ConflictGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  const int m = static_cast<int>(vertices.size());
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (adjacency[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
        out.emplace_back(i, j);
      }
    }
  }
  return out;
}

ConflictGraph conflict_graph(const Game& g, int threads) {
  return conflict_graph_impl(g, threads, Deadline{});
}

CliqueBound dimension_lower_clique(const Game& g, int threads) {
  const ConflictGraph cg = conflict_graph(g, threads);
  const CliqueResult clique = max_clique(cg.adjacency);
  CliqueBound bound;
  bound.size = static_cast<int>(clique.members.size());
  bound.exact = clique.exact;
  for (int v : clique.members) {
    bound.witness.push_back(cg.vertices[static_cast<std::size_t>(v)]);
  }
  return bound;
}

DimensionReport dimension_exact(const Game& g, const DimensionOptions& options) {
  if (g.n() > kDimensionExactMaxVoters) {
    throw CapExceeded("dimension_exact supports at most 20 voters");
  }
  const Deadline deadline = Deadline::from_budget(options.budget_seconds);
  DimensionReport report;
  try {
    compute_exact(g, options, deadline, report);
  } catch (const BudgetExpired&) {
    report.budget_exceeded = true;
    report.exact.reset();
    report.witness_representation.reset();
  }
  return report;
}

DimensionReport codimension_exact(const Game& g, const DimensionOptions& options) {
  DimensionReport report = dimension_exact(dual(g), options);
  if (report.witness_representation) {
    for (WeightedGame& wg : *report.witness_representation) {
      wg = dual(Game(wg)).as_weighted();
    }
  }
  for (Coalition& c : report.clique_witness) c = c.complement();
  return report;
}

std::vector<WeightedGame> unit_class_representation(const Game& g, int class_index) {
  const DesirabilityReport des = desirability(g);
  if (class_index < 1 || class_index > static_cast<int>(des.classes.size())) {
    throw InvalidArgument("class index out of range");
  }
  const std::vector<Coalition> mls = maximal_losing(g);
  const Coalition mask = Coalition::from_members(
      g.n(), des.classes[static_cast<std::size_t>(class_index - 1)]);
  return unit_class_groups(g.n(), mask, mls).games;
}

Game boolean_upper_construction(const VectorGame& g) {
  const auto issues = validate(Game(g));
  if (!issues.empty()) throw InvalidArgument(issues.front().message);

  const int t = g.t();
  std::vector<Game> parts;
  for (const TypeVector& m : g.shift_min_winning) {
    std::vector<Game> leaves;
    long prefix = 0;
    int covered = 0;
    for (int j = 1; j <= t; ++j) {
      prefix += m[static_cast<std::size_t>(j - 1)];
      covered += g.class_sizes[static_cast<std::size_t>(j - 1)];
      if (prefix == 0) continue;
      WeightedGame leaf;
      leaf.quota = prefix;
      leaf.weights.assign(static_cast<std::size_t>(g.n()), Rational(0));
      for (int v = 1; v <= covered; ++v) {
        leaf.weights[static_cast<std::size_t>(v - 1)] = 1;
      }
      leaves.emplace_back(std::move(leaf));
    }
    parts.push_back(leaves.size() == 1
                        ? std::move(leaves.front())
                        : Game(Combination{BoolOp::And, std::move(leaves)}));
  }
  return parts.size() == 1 ? std::move(parts.front())
                           : Game(Combination{BoolOp::Or, std::move(parts)});
}

BooleanBounds booldim_bounds(const VectorGame& g) {
  const auto issues = validate(Game(g));
  if (!issues.empty()) throw InvalidArgument(issues.front().message);

  const long r = static_cast<long>(g.shift_min_winning.size());
  const long t = g.t();
  const long n = g.n();

  BooleanBounds bounds;
  bounds.product_bound = static_cast<long long>(r) * t;
  Integer power;
  mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(n),
                static_cast<unsigned long>(t));
  bounds.grid_bound = Integer(t) * power;
  if (t == 2) {
    if (n < 3 * r - 3) {
      throw std::logic_error("two-class antichain larger than the voter count allows");
    }
    bounds.two_class_bound = (2 * (n + 3)) / 3;
  }
  return bounds;
}

}  // namespace votedim
