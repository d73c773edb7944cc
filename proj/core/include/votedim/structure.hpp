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

#include <vector>

#include "votedim/game.hpp"
#include "votedim/winning_table.hpp"

namespace votedim {

/// The antichain of minimal winning coalitions, in colexicographic order.
/// Enumeration-backed for non-explicit inputs (n <= 24).
std::vector<Coalition> minimal_winning(const Game& game);

/// The antichain of maximal losing coalitions, in colexicographic order.
std::vector<Coalition> maximal_losing(const Game& game);

enum class Relation {
  StrictlyMore,   // i is strictly more desirable than j
  Equivalent,     // swapping i and j never changes any outcome
  StrictlyLess,
  Incomparable,
};

/// Pairwise desirability: i is at least as desirable as j when handing j's
/// seat to i never turns a winning coalition losing. The relation is always a
/// preorder; the game is complete exactly when no pair is incomparable.
struct DesirabilityReport {
  int n = 0;
  std::vector<std::vector<Relation>> relation;  // n x n, diagonal Equivalent
  bool complete = false;
  /// Equivalence classes of mutually-equivalent voters. For complete games
  /// they are ordered from most to least desirable; otherwise they are in
  /// order of each class's smallest voter.
  std::vector<std::vector<int>> classes;
};

DesirabilityReport desirability(const Game& game);

struct CompletenessResult {
  bool complete = false;
  std::vector<std::vector<int>> classes;  // meaningful ordering only if complete
};

CompletenessResult is_complete(const Game& game);

/// The dual game: a coalition wins in the dual iff its complement loses in
/// the original. Weighted and combination inputs dualize at any size;
/// explicit and class-form inputs go through enumeration (n <= 24) or a
/// type-grid scan respectively.
Game dual(const Game& game);

/// Function-level equality. Uses coalition enumeration for n <= 24; larger
/// games compare on the type grid, which requires every side to be uniform on
/// the class partition of one of the inputs.
bool games_equal(const Game& a, const Game& b);

/// Appends `count` voters that never affect any outcome.
Game add_null_voters(const Game& game, int count);

}  // namespace votedim
