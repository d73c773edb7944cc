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

#include <optional>
#include <vector>

#include "helpers.hpp"
#include "votedim/constructions.hpp"
#include "votedim/errors.hpp"
#include "votedim/game.hpp"
#include "votedim/separation.hpp"
#include "votedim/structure.hpp"
#include "votedim/vector_game.hpp"

using namespace votedim;
using votedim_tests::coal;
using votedim_tests::wg;

namespace {

bool accepts(const WeightedGame& w, const Coalition& s) { return w.weight_of(s) >= w.quota; }

bool rejects(const WeightedGame& w, const Coalition& s) {
  return w.weight_of(s) <= w.quota - 1;
}

}  // namespace

TEST_CASE("weighted games yield a re-substitutable representation") {
  const Game g(wg(3, {2, 1, 1, 1}));
  const std::optional<WeightedGame> w = is_weighted(g);
  REQUIRE(w.has_value());
  CHECK(games_equal(Game(*w), g));
}

TEST_CASE("the reference games are not weighted") {
  CHECK_FALSE(is_weighted(example_game("1")).has_value());
  CHECK_FALSE(is_weighted(example_game("2")).has_value());
}

TEST_CASE("a weighted game hiding in another representation is found") {
  // Intersecting these two thresholds gives plain majority on class 1.
  const Game g = votedim_tests::intersection({wg(2, {1, 1, 0, 0}), wg(1, {1, 1, 0, 0})});
  const std::optional<WeightedGame> w = is_weighted(g);
  REQUIRE(w.has_value());
  CHECK(games_equal(Game(*w), g));
}

TEST_CASE("weightedness of large vector games via lazy constraint generation") {
  VectorGame unanimity_of_class1;
  unanimity_of_class1.class_sizes = {3, 37};
  unanimity_of_class1.shift_min_winning = {{3, 0}};
  const std::optional<WeightedGame> w = is_weighted(Game(unanimity_of_class1));
  REQUIRE(w.has_value());
  CHECK(accepts(*w, coal(40, {1, 2, 3})));
  CHECK(rejects(*w, coal(40, {1, 2})));
  Coalition everyone_else(40);
  for (int v = 3; v <= 40; ++v) everyone_else.add(v);
  CHECK(rejects(*w, everyone_else));

  CHECK_FALSE(is_weighted(Game(staircase_game(5))).has_value());
}

TEST_CASE("separating single losing coalitions from the first reference game") {
  const Game g = example_game("1");
  const std::optional<WeightedGame> w = separate(g, {coal(4, {1, 3})});
  REQUIRE(w.has_value());
  CHECK(accepts(*w, coal(4, {1, 2})));
  CHECK(accepts(*w, coal(4, {3, 4})));
  CHECK(accepts(*w, coal(4, {1, 2, 3})));
  CHECK(rejects(*w, coal(4, {1, 3})));

  // {1,3} and {1,4} share voter 1, and pushing its weight down resolves them.
  CHECK(separate(g, {coal(4, {1, 3}), coal(4, {1, 4})}).has_value());
}

TEST_CASE("conflicting pairs cannot be rejected together") {
  const Game g = example_game("1");
  CHECK_FALSE(separate(g, {coal(4, {1, 3}), coal(4, {2, 4})}).has_value());
  CHECK_FALSE(separate(g, {coal(4, {2, 3}), coal(4, {1, 4})}).has_value());

  const Game h = example_game("2");
  CHECK_FALSE(separate(h, {coal(6, {1, 3, 4}), coal(6, {2, 5, 6})}).has_value());
  CHECK(separate(h, {coal(6, {1, 3, 4}), coal(6, {1, 3, 5})}).has_value());
}

TEST_CASE("separate refuses winning coalitions on the reject side") {
  CHECK_THROWS_AS(separate(example_game("1"), {coal(4, {1, 2})}), InvalidArgument);
}

TEST_CASE("infeasible separations carry Farkas multipliers") {
  SeparationProblem p;
  p.n = 4;
  p.accept = minimal_winning(example_game("1"));
  p.reject = {coal(4, {1, 3}), coal(4, {2, 4})};
  const SeparationOutcome outcome = solve_separation(p);
  REQUIRE_FALSE(outcome.feasible);
  CHECK_FALSE(outcome.accept_multipliers.empty());
  CHECK_FALSE(outcome.reject_multipliers.empty());

  // The combination of the rows with these multipliers must be contradictory
  // for every nonnegative w and q >= 1: each voter's net coefficient stays
  // nonpositive and the accepted rows carry at least the rejected mass.
  Rational accept_total = 0;
  Rational reject_total = 0;
  std::vector<Rational> balance(4, Rational(0));
  for (const auto& [c, lambda] : outcome.accept_multipliers) {
    CHECK(lambda > 0);
    accept_total += lambda;
    for (int v : c.members()) balance[static_cast<std::size_t>(v - 1)] += lambda;
  }
  for (const auto& [c, mu] : outcome.reject_multipliers) {
    CHECK(mu > 0);
    reject_total += mu;
    for (int v : c.members()) balance[static_cast<std::size_t>(v - 1)] -= mu;
  }
  CHECK(accept_total >= reject_total);
  CHECK(reject_total > 0);
  for (const Rational& b : balance) CHECK(b <= 0);
}

TEST_CASE("order-respecting separation") {
  const VectorGame g = example_game("2").as_vector();

  const std::optional<WeightedGame> w = ordered_separate(g, coal(6, {1, 3, 4}));
  REQUIRE(w.has_value());
  CHECK(rejects(*w, coal(6, {1, 3, 4})));
  CHECK(accepts(*w, coal(6, {1, 2})));
  CHECK(accepts(*w, coal(6, {3, 4, 5, 6})));
  CHECK(accepts(*w, coal(6, {1, 4, 5, 6})));
  CHECK(accepts(*w, coal(6, {2, 3, 4, 5})));
  // Class-1 weights must dominate class-2 weights.
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 2; j < 6; ++j) CHECK(w->weights[i] >= w->weights[j]);
  }
}

TEST_CASE("ordered separation on staircase games depends on the class sizes") {
  // With five voters per class, a type-(4,4,4,4) coalition can still be
  // rejected by weights that respect the class order.
  const VectorGame small = staircase_game(5);
  Coalition probe(20);
  for (int c = 0; c < 4; ++c) {
    for (int k = 1; k <= 4; ++k) probe.add(5 * c + k);
  }
  CHECK_FALSE(evaluate(Game(small), probe));
  const std::optional<WeightedGame> ordered = ordered_separate(small, probe);
  REQUIRE(ordered.has_value());
  CHECK(rejects(*ordered, probe));

  // Once classes two and four can win on their own (nine and seventeen
  // voters), no order-respecting weighting rejects such a coalition and only
  // the unordered separation stays feasible.
  const VectorGame wide = from_shift_max_losing({5, 9, 5, 17}, {TypeVector{4, 4, 4, 4}});
  CHECK(validate(Game(wide)).empty());
  Coalition losing(36);
  const int starts[4] = {0, 5, 14, 19};
  for (int c = 0; c < 4; ++c) {
    for (int k = 1; k <= 4; ++k) losing.add(starts[c] + k);
  }
  CHECK_FALSE(evaluate(Game(wide), losing));
  CHECK_FALSE(ordered_separate(wide, losing).has_value());
  const std::optional<WeightedGame> w = separate(Game(wide), {losing});
  REQUIRE(w.has_value());
  CHECK(rejects(*w, losing));
}

TEST_CASE("feasible solutions satisfy quota at least one") {
  SeparationProblem p;
  p.n = 3;
  p.accept = {coal(3, {1, 2}), coal(3, {3})};
  p.reject = {coal(3, {1}), coal(3, {2})};
  const SeparationOutcome outcome = solve_separation(p);
  REQUIRE(outcome.feasible);
  REQUIRE(outcome.solution.has_value());
  CHECK(outcome.solution->quota >= 1);
  for (const Coalition& a : p.accept) {
    Rational total = 0;
    for (int v : a.members()) total += outcome.solution->weights[static_cast<std::size_t>(v - 1)];
    CHECK(total >= outcome.solution->quota);
  }
  for (const Coalition& r : p.reject) {
    Rational total = 0;
    for (int v : r.members()) total += outcome.solution->weights[static_cast<std::size_t>(v - 1)];
    CHECK(total <= outcome.solution->quota - 1);
  }
}
