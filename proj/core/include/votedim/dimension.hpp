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

#include <optional>
#include <utility>
#include <vector>

#include "votedim/coalition.hpp"
#include "votedim/game.hpp"
#include "votedim/rational.hpp"

namespace votedim {

/// Vertices are the maximal losing coalitions in colexicographic order. An
/// edge joins two coalitions that no single weighted game can reject while
/// accepting every winning coalition, so the vertices of any clique must go
/// to pairwise distinct games in an intersection representation.
struct ConflictGraph {
  std::vector<Coalition> vertices;
  std::vector<std::vector<char>> adjacency;

  /// Edge list as index pairs (i, j) with i < j, ascending.
  std::vector<std::pair<int, int>> edges() const;
};

/// One LP feasibility question per unordered pair of maximal losing
/// coalitions, after a cheap length-2 certificate shortcut and deduplication
/// of pairs that agree on their per-class intersection pattern (such pairs
/// are related by a voter permutation that fixes the game). `threads` bounds
/// how many LP solves run concurrently. Requires n <= 24 and at most 500
/// maximal losing coalitions.
ConflictGraph conflict_graph(const Game& g, int threads = 1);

struct CliqueBound {
  int size = 0;
  std::vector<Coalition> witness;
  /// False when the graph exceeded the exact-search limit and the size is
  /// only a greedy lower bound.
  bool exact = true;
};

/// Lower bound on the dimension: a maximum clique in the conflict graph.
CliqueBound dimension_lower_clique(const Game& g, int threads = 1);

struct DimensionReport {
  int lower_clique = 0;
  std::vector<Coalition> clique_witness;
  /// Number of maximal losing coalitions (one game per coalition always
  /// suffices).
  int upper_maxlosing = 0;
  /// Size of the smallest unit_class_representation over all classes.
  int upper_unit_class = 0;
  std::optional<int> exact;
  /// When exact is present: weighted games whose intersection (union, for
  /// codimension_exact) equals the input game.
  std::optional<std::vector<WeightedGame>> witness_representation;
  /// True when the wall-clock budget ran out; only the bounds are valid then.
  bool budget_exceeded = false;
};

struct DimensionOptions {
  /// Wall-clock cap; unset means unlimited.
  std::optional<double> budget_seconds;
  int threads = 1;
};

/// Exact dimension: the minimum number of weighted games whose intersection
/// equals g. Bounds are computed first; if they already meet, that settles
/// the value. Otherwise groups of co-rejectable coalitions are greedily
/// merged starting from the best per-class partition, and any remaining gap
/// is closed by branch-and-bound assignment of maximal losing coalitions to
/// groups with memoized LP verdicts (run only when at most 60 coalitions).
/// Requires n <= 20.
DimensionReport dimension_exact(const Game& g, const DimensionOptions& options = {});

/// Exact codimension: minimum number of weighted games whose union equals g.
/// Computed as the dimension of the dual; witnesses are dualized back, and
/// the clique witness coalitions are complemented back into coalitions of g.
DimensionReport codimension_exact(const Game& g, const DimensionOptions& options = {});

/// One weighted game per maximal losing coalition S, built on the class
/// N_i = classes[class_index - 1] of the desirability partition: with
/// a = |S ∩ N_i|, the game has quota a + 1, weight 1 on N_i, weight a + 1
/// outside N_i ∪ S, and weight 0 on S \ N_i. Games agreeing on
/// (S \ N_i, a) coincide and are emitted once, in colex order of their first
/// coalition. The intersection of the list equals g. Requires n <= 24.
std::vector<WeightedGame> unit_class_representation(const Game& g, int class_index);

/// A Boolean formula over weighted games equal to the vector game: for each
/// shift-minimal winning vector, the AND of its prefix threshold games
/// (quota = prefix sum up to class j, weight 1 on classes 1..j), OR-ed over
/// the vectors. Quota-0 leaves are constant true and dropped; single-part
/// ANDs and ORs collapse. At most r * t leaves.
Game boolean_upper_construction(const VectorGame& g);

struct BooleanBounds {
  /// r * t: leaves used by boolean_upper_construction.
  long long product_bound = 0;
  /// t * n^t.
  Integer grid_bound;
  /// floor(2(n + 3) / 3), only for two-class games.
  std::optional<long long> two_class_bound;
};

BooleanBounds booldim_bounds(const VectorGame& g);

inline constexpr int kConflictGraphMaxLosing = 500;
inline constexpr int kDimensionExactMaxVoters = 20;
inline constexpr int kGroupSearchMaxLosing = 60;

}  // namespace votedim
