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

#include <cstddef>
#include <vector>

#include "helpers.hpp"
#include "votedim/constructions.hpp"
#include "votedim/errors.hpp"
#include "votedim/game.hpp"
#include "votedim/structure.hpp"
#include "votedim/trading.hpp"
#include "votedim/vector_game.hpp"

using namespace votedim;
using namespace votedim_tests;

TEST_CASE("the example catalog") {
  const Game first = example_game("1");
  REQUIRE(first.is_explicit());
  CHECK(first.n() == 4);
  CHECK(first.as_explicit().min_winning ==
        std::vector<Coalition>{coal(4, {1, 2}), coal(4, {3, 4})});

  const Game second = example_game("2");
  REQUIRE(second.is_vector());
  CHECK(second.as_vector().class_sizes == std::vector<int>{2, 4});
  CHECK(second.as_vector().shift_min_winning ==
        std::vector<TypeVector>{{2, 0}, {0, 4}});

  const Game shape = example_game("lisbon-shape");
  REQUIRE(shape.is_combination());
  CHECK(shape.n() == 3);
  CHECK(validate(shape).empty());
  CHECK(games_equal(shape, Game(wg(2, {1, 1, 1}))));

  CHECK_THROWS_AS(example_game("3"), InvalidArgument);
  CHECK_THROWS_AS(example_game(""), InvalidArgument);
}

TEST_CASE("staircase game thresholds") {
  const VectorGame g = staircase_game(5);
  CHECK(g.class_sizes == std::vector<int>(4, 5));
  CHECK(g.n() == 20);
  CHECK(validate(Game(g)).empty());

  CHECK(is_winning_vector(g, {5, 0, 0, 0}));
  CHECK(is_winning_vector(g, {4, 5, 0, 0}));
  CHECK(is_winning_vector(g, {4, 4, 4, 5}));
  CHECK_FALSE(is_winning_vector(g, {4, 4, 4, 4}));
  CHECK_FALSE(is_winning_vector(g, {3, 3, 3, 4}));
  CHECK_FALSE(is_winning_vector(g, {0, 0, 0, 5}));
  CHECK_FALSE(is_winning_vector(g, {4, 4, 0, 0}));

  CHECK(staircase_game().n() == 80);
  CHECK_THROWS_AS(staircase_game(4), InvalidArgument);
}

TEST_CASE("the two-class family at its smallest size is the reference game") {
  const FamilyBundle bundle = parametric_bundle(2, 4);
  CHECK(games_equal(Game(bundle.game), example_game("2")));
  CHECK(bundle.claimed_lower_bound == 2);

  REQUIRE(bundle.losing_family.size() == 2);
  CHECK(bundle.losing_family[0] == coal(6, {1, 3, 4}));
  CHECK(bundle.losing_family[1] == coal(6, {2, 5, 6}));

  REQUIRE(bundle.certificates.size() == 1);
  const TradingTransform& tt = bundle.certificates.front();
  CHECK(tt.X == std::vector<Coalition>{coal(6, {1, 2}), coal(6, {3, 4, 5, 6})});
  CHECK(tt.Y == std::vector<Coalition>{coal(6, {1, 3, 4}), coal(6, {2, 5, 6})});

  REQUIRE(bundle.upper_witness.has_value());
  REQUIRE(bundle.upper_witness->size() == 2);
  CHECK(bundle.upper_witness->front().quota == 8);
  CHECK(bundle.upper_witness->front().weights ==
        std::vector<Rational>{3, 5, 2, 2, 2, 2});
  CHECK(bundle.upper_witness->back().weights ==
        std::vector<Rational>{5, 3, 2, 2, 2, 2});
  CHECK(games_equal(intersection(*bundle.upper_witness), Game(bundle.game)));
}

TEST_CASE("two-class family bundles are internally consistent") {
  for (int d = 2; d <= 4; ++d) {
    const FamilyBundle bundle = parametric_bundle(d, 2 * d);
    const Game game(bundle.game);
    CHECK(bundle.claimed_lower_bound == d);
    CHECK(bundle.losing_family.size() == static_cast<std::size_t>(d));
    CHECK(bundle.certificates.size() == static_cast<std::size_t>(d * (d - 1) / 2));
    for (const Coalition& t : bundle.losing_family) {
      CHECK_FALSE(evaluate(game, t));
    }
    for (const TradingTransform& tt : bundle.certificates) {
      CHECK(verify_trading_transform(game, tt) == TransformVerdict::ValidCertificate);
    }
    REQUIRE(bundle.upper_witness.has_value());
    CHECK(bundle.upper_witness->size() == static_cast<std::size_t>(d));
    CHECK(games_equal(intersection(*bundle.upper_witness), game));
  }
}

TEST_CASE("two-class family guards") {
  CHECK_THROWS_AS(parametric_bundle(1, 4), InvalidArgument);
  CHECK_THROWS_AS(parametric_bundle(3, 5), InvalidArgument);
}

TEST_CASE("code-based family at its smallest size") {
  const FamilyBundle bundle = code_family_bundle(2);
  CHECK(bundle.game.class_sizes == std::vector<int>{4, 4});
  CHECK(bundle.game.shift_min_winning == std::vector<TypeVector>{{2, 0}, {0, 4}});
  CHECK(bundle.claimed_lower_bound == 2);

  REQUIRE(bundle.losing_family.size() == 2);
  CHECK(bundle.losing_family[0] == coal(8, {1, 5, 6}));
  CHECK(bundle.losing_family[1] == coal(8, {2, 7, 8}));

  REQUIRE(bundle.certificates.size() == 1);
  const TradingTransform& tt = bundle.certificates.front();
  CHECK(tt.X == std::vector<Coalition>{coal(8, {5, 6, 7, 8}), coal(8, {1, 2})});
  CHECK(tt.Y == std::vector<Coalition>{coal(8, {1, 5, 6}), coal(8, {2, 7, 8})});
  CHECK(bundle.upper_witness == std::nullopt);
}

TEST_CASE("code-based family bundles are internally consistent") {
  for (int k = 2; k <= 3; ++k) {
    const FamilyBundle bundle = code_family_bundle(k);
    const Game game(bundle.game);
    CHECK(validate(game).empty());
    CHECK(bundle.losing_family.size() ==
          static_cast<std::size_t>(bundle.claimed_lower_bound));
    CHECK(bundle.certificates.size() ==
          static_cast<std::size_t>(bundle.claimed_lower_bound *
                                   (bundle.claimed_lower_bound - 1) / 2));
    for (const Coalition& t : bundle.losing_family) {
      CHECK_FALSE(evaluate(game, t));
    }
    for (const TradingTransform& tt : bundle.certificates) {
      CHECK(verify_trading_transform(game, tt) == TransformVerdict::ValidCertificate);
    }
  }
  CHECK(code_family_bundle(3).claimed_lower_bound == 4);
}

TEST_CASE("code-based family guards") {
  CHECK_THROWS_AS(code_family_bundle(1), InvalidArgument);
}
