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

/// Searches for a weighted game [q; w] with w >= 0, q >= 1 that accepts
/// (weight >= q) every coalition on the accept side and rejects
/// (weight <= q - 1) every coalition on the reject side. Either side can be
/// given explicitly or as a whole vector game, in which case the winning
/// (resp. losing) coalitions are imposed through lazy constraint generation.
struct SeparationProblem {
  int n = 0;
  std::vector<Coalition> accept;
  std::optional<VectorGame> accept_vector;
  std::vector<Coalition> reject;
  std::optional<VectorGame> reject_vector;
  /// Pairs (i, j) of 1-based voters meaning w_i >= w_j.
  std::vector<std::pair<int, int>> order_constraints;
};

struct RationalSolution {
  Rational quota;
  std::vector<Rational> weights;
};

struct SeparationOutcome {
  bool feasible = false;
  std::optional<RationalSolution> solution;
  /// When infeasible: nonnegative Farkas multipliers attached to the
  /// generated accept rows (w(A) >= q) and reject rows (w(R) <= q - 1).
  /// Empty when order constraints carry part of the infeasibility.
  std::vector<std::pair<Coalition, Rational>> accept_multipliers;
  std::vector<std::pair<Coalition, Rational>> reject_multipliers;
};

/// Full outcome, including Farkas row multipliers on infeasibility.
SeparationOutcome solve_separation(const SeparationProblem& problem);

/// Convenience wrapper returning just the solution.
std::optional<RationalSolution> lp_feasible(const SeparationProblem& problem);

/// Weighted representation of g, or nullopt when no quota/weights exist.
/// Works at any size for vector games; other representations are capped at
/// 24 voters because they need the extremal antichains.
std::optional<WeightedGame> is_weighted(const Game& g);

/// A weighted game accepting every winning coalition of g and rejecting
/// every coalition in `losing`, or nullopt. Throws when a member of `losing`
/// wins in g.
std::optional<WeightedGame> separate(const Game& g, const std::vector<Coalition>& losing);

/// Like separate(g, {losing}) but additionally requiring the weights to
/// respect the class order: w_a >= w_b whenever a's class precedes b's.
std::optional<WeightedGame> ordered_separate(const VectorGame& g, const Coalition& losing);

}  // namespace votedim

