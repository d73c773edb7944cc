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

#include <doctest.h>

#include <vector>

#include "helpers.hpp"
#include "votedim/constructions.hpp"
#include "votedim/errors.hpp"
#include "votedim/game.hpp"
#include "votedim/structure.hpp"

using namespace votedim;
using votedim_tests::coal;
using votedim_tests::wg;

TEST_CASE("extremal antichains come back in colexicographic order") {
  const Game g = example_game("1");
  CHECK(minimal_winning(g) == std::vector<Coalition>{coal(4, {1, 2}), coal(4, {3, 4})});
  CHECK(maximal_losing(g) == std::vector<Coalition>{coal(4, {1, 3}), coal(4, {2, 3}),
                                                    coal(4, {1, 4}), coal(4, {2, 4})});
}

TEST_CASE("extremal antichains of a weighted majority game") {
  const Game g(wg(3, {2, 1, 1, 1}));
  CHECK(minimal_winning(g) == std::vector<Coalition>{coal(4, {1, 2}), coal(4, {1, 3}),
                                                     coal(4, {1, 4}), coal(4, {2, 3, 4})});
  CHECK(maximal_losing(g) == std::vector<Coalition>{coal(4, {1}), coal(4, {2, 3}),
                                                    coal(4, {2, 4}), coal(4, {3, 4})});
}

TEST_CASE("the first reference game is not complete") {
  const DesirabilityReport report = desirability(example_game("1"));
  CHECK_FALSE(report.complete);
  CHECK(report.relation[0][1] == Relation::Equivalent);
  CHECK(report.relation[2][3] == Relation::Equivalent);
  CHECK(report.relation[0][2] == Relation::Incomparable);
  CHECK(report.classes == std::vector<std::vector<int>>{{1, 2}, {3, 4}});
  CHECK_FALSE(is_complete(example_game("1")).complete);
}

TEST_CASE("the second reference game is complete with classes of sizes 2 and 4") {
  const DesirabilityReport report = desirability(example_game("2"));
  CHECK(report.complete);
  CHECK(report.classes == std::vector<std::vector<int>>{{1, 2}, {3, 4, 5, 6}});
  CHECK(report.relation[0][2] == Relation::StrictlyMore);
  CHECK(report.relation[4][5] == Relation::Equivalent);
}

TEST_CASE("weighted games are complete and ordered by weight") {
  const CompletenessResult r = is_complete(Game(wg(3, {2, 1, 1, 3})));
  CHECK(r.complete);
  CHECK(r.classes == std::vector<std::vector<int>>{{4}, {1}, {2, 3}});
}

TEST_CASE("dual membership flips complements") {
  const Game g = example_game("1");
  const Game d = dual(g);
  // A coalition wins in the dual iff its complement loses in g.
  CHECK(evaluate(d, coal(4, {1, 3})));
  CHECK(evaluate(d, coal(4, {1, 2, 3})));
  CHECK_FALSE(evaluate(d, coal(4, {1, 2})));
  CHECK_FALSE(evaluate(d, coal(4, {3, 4})));
}

TEST_CASE("dualizing twice restores the game") {
  for (const Game& g : {example_game("1"), example_game("2"), example_game("lisbon-shape"),
                        Game(wg(3, {2, 1, 1, 1}))}) {
    CHECK(games_equal(dual(dual(g)), g));
  }
}

TEST_CASE("duals of large vector games avoid coalition enumeration") {
  const VectorGame g = staircase_game(20);
  const Game d = dual(Game(g));
  REQUIRE(d.is_vector());
  Coalition first_class(g.n());
  for (int v = 1; v <= 20; ++v) first_class.add(v);
  // The first class alone wins, so its complement must lose in the dual.
  CHECK(evaluate(Game(g), first_class));
  CHECK_FALSE(evaluate(d, first_class.complement()));
}

TEST_CASE("function equality ignores the representation") {
  const Game g = example_game("1");
  CHECK(games_equal(g, votedim_tests::intersection({wg(2, {1, 1, 2, 0}), wg(2, {1, 1, 0, 2})})));
  CHECK(games_equal(g, votedim_tests::game_union({wg(2, {1, 1, 0, 0}), wg(2, {0, 0, 1, 1})})));
  CHECK_FALSE(games_equal(g, Game(wg(2, {1, 1, 1, 1}))));

  const Game h = example_game("2");
  CHECK(games_equal(h, votedim_tests::intersection({wg(8, {5, 3, 2, 2, 2, 2}),
                                                    wg(8, {3, 5, 2, 2, 2, 2})})));
  CHECK(games_equal(h, votedim_tests::game_union({wg(2, {1, 1, 0, 0, 0, 0}),
                                                  wg(4, {1, 1, 1, 1, 1, 1})})));
}

TEST_CASE("equality on large class-uniform games uses the type grid") {
  const VectorGame g = staircase_game(20);
  CHECK(games_equal(Game(g), Game(g)));
  VectorGame other = g;
  other.shift_min_winning.pop_back();
  const bool same = games_equal(Game(g), Game(other));
  CHECK_FALSE(same);
}

TEST_CASE("null voters never change outcomes") {
  const Game g = add_null_voters(example_game("1"), 2);
  CHECK(g.n() == 6);
  CHECK(evaluate(g, coal(6, {1, 2})));
  CHECK(evaluate(g, coal(6, {1, 2, 5, 6})));
  CHECK_FALSE(evaluate(g, coal(6, {1, 3, 5, 6})));
  const DesirabilityReport report = desirability(g);
  CHECK(report.relation[4][5] == Relation::Equivalent);
}
