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

#include <cstdint>
#include <vector>

#include "helpers.hpp"
#include "votedim/constructions.hpp"
#include "votedim/errors.hpp"
#include "votedim/game.hpp"
#include "votedim/structure.hpp"
#include "votedim/type_vector.hpp"
#include "votedim/vector_game.hpp"

using namespace votedim;
using votedim_tests::coal;

TEST_CASE("shift dominance compares prefix sums") {
  CHECK(dominates({2, 0}, {1, 1}));
  CHECK_FALSE(dominates({1, 1}, {2, 0}));
  CHECK(dominates({1, 1}, {1, 1}));
  CHECK_FALSE(strictly_dominates({1, 1}, {1, 1}));
  CHECK(strictly_dominates({2, 0}, {0, 2}));
  CHECK_FALSE(dominates({0, 4}, {2, 0}));
  CHECK_FALSE(dominates({2, 0}, {0, 4}));
}

TEST_CASE("winning vectors of the second reference game") {
  const VectorGame g = example_game("2").as_vector();
  CHECK(is_winning_vector(g, {2, 0}));
  CHECK(is_winning_vector(g, {1, 3}));
  CHECK(is_winning_vector(g, {0, 4}));
  CHECK(is_winning_vector(g, {2, 4}));
  CHECK_FALSE(is_winning_vector(g, {1, 2}));
  CHECK_FALSE(is_winning_vector(g, {0, 3}));
  CHECK_THROWS_AS(is_winning_vector(g, {3, 0}), InvalidArgument);
  CHECK_THROWS_AS(is_winning_vector(g, {2, 0, 0}), InvalidArgument);
}

TEST_CASE("shift-extremal vectors of the second reference game") {
  const ShiftExtremal e = shift_extremal(example_game("2").as_vector());
  CHECK(e.shift_min_winning == std::vector<TypeVector>{{0, 4}, {2, 0}});
  CHECK(e.shift_max_losing == std::vector<TypeVector>{{1, 2}});
}

TEST_CASE("a game can be rebuilt from its shift-maximal losing vectors") {
  const VectorGame rebuilt = from_shift_max_losing({2, 4}, {{1, 2}});
  const ShiftExtremal e = shift_extremal(rebuilt);
  CHECK(e.shift_min_winning == std::vector<TypeVector>{{0, 4}, {2, 0}});
  CHECK(games_equal(Game(rebuilt), example_game("2")));

  CHECK_THROWS_AS(from_shift_max_losing({2, 4}, {}), InvalidArgument);
  // The full vector must stay winning, so it cannot be listed as losing.
  CHECK_THROWS_AS(from_shift_max_losing({2, 4}, {{2, 4}}), InvalidArgument);
}

TEST_CASE("oracle conversion recovers class sizes and shift-minimal vectors") {
  const ExplicitGame expanded = expand(example_game("2").as_vector());
  CHECK(expanded.n == 6);
  CHECK(expanded.min_winning.size() == 10);  // (2,0): 1, (1,3): 8, (0,4): 1

  const VectorGame recovered = from_oracle(Game(expanded));
  CHECK(recovered.class_sizes == std::vector<int>{2, 4});
  CHECK(recovered.shift_min_winning == std::vector<TypeVector>{{0, 4}, {2, 0}});

  CHECK_THROWS_AS(from_oracle(example_game("1")), InvalidArgument);
}

TEST_CASE("oracle conversion orders classes from most to least desirable") {
  // Class 2 is the strong one here; conversion must put it first.
  const VectorGame g = from_oracle(Game(votedim_tests::wg(4, {1, 3, 3, 1})));
  CHECK(g.class_sizes == std::vector<int>{2, 2});
  CHECK(is_winning_vector(g, {2, 0}));
  CHECK_FALSE(is_winning_vector(g, {0, 2}));
}

TEST_CASE("two-class enumeration counts match the closed formula") {
  const std::vector<std::size_t> expected{1, 5, 15, 36, 76, 148, 273};
  for (int n = 2; n <= 8; ++n) {
    const std::vector<VectorGame> games = enumerate_t2(n);
    CHECK(games.size() == expected[static_cast<std::size_t>(n - 2)]);
    CHECK(count_formula_t2(n) == static_cast<std::uint64_t>(games.size()));
  }
}

TEST_CASE("enumerated two-class games are valid, complete, and distinct") {
  const std::vector<VectorGame> games = enumerate_t2(6);
  for (const VectorGame& g : games) {
    CHECK(validate(Game(g)).empty());
    CHECK(g.t() == 2);
    CHECK(is_complete(Game(g)).complete);
  }
  for (std::size_t i = 0; i < games.size(); ++i) {
    for (std::size_t j = i + 1; j < games.size(); ++j) {
      if (games[i].class_sizes != games[j].class_sizes) continue;
      CHECK_FALSE(games_equal(Game(games[i]), Game(games[j])));
    }
  }
}

TEST_CASE("two-class enumeration is capped") {
  CHECK_THROWS_AS(enumerate_t2(11), CapExceeded);
  CHECK_THROWS_AS(enumerate_t2(1), InvalidArgument);
}
