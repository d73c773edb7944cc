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

#include <cstdint>
#include <vector>

#include "votedim/game.hpp"
#include "votedim/type_vector.hpp"

namespace votedim {

/// True iff m dominates one of the game's shift-minimal winning vectors.
/// Throws InvalidArgument when m is not within the class-size box.
bool is_winning_vector(const VectorGame& g, const TypeVector& m);

struct ShiftExtremal {
  std::vector<TypeVector> shift_min_winning;
  std::vector<TypeVector> shift_max_losing;
};

/// Scans the full grid of type vectors and returns the dominance-minimal
/// winning and dominance-maximal losing vectors, both in lexicographic order.
/// For a valid game the winning list equals g.shift_min_winning up to order.
ShiftExtremal shift_extremal(const VectorGame& g);

/// Builds the game whose losing vectors are exactly those dominated by some
/// member of `shift_max_losing`. The input must be a nonempty antichain within
/// the class-size box, and must leave the full vector winning. The returned
/// game is stored through its shift-minimal winning vectors; it may have
/// equally desirable adjacent classes, which validate() reports.
VectorGame from_shift_max_losing(std::vector<int> class_sizes,
                                 const std::vector<TypeVector>& shift_max_losing);

/// Converts any complete game to vector form: classes ordered from most to
/// least desirable, shift-minimal winning vectors extracted. Throws
/// InvalidArgument when the game is not complete.
VectorGame from_oracle(const Game& g);

/// Converts a vector game to explicit form over voters 1..n, assigned to
/// classes in order. The minimal winning coalitions are those whose type
/// vector is winning while every single-voter removal is losing.
ExplicitGame expand(const VectorGame& g);

/// All complete games with n voters and exactly two voter classes, one game
/// per canonical form: for each split n_1 + n_2 = n, every antichain of
/// winning vectors listed with strictly increasing first coordinate and
/// strictly decreasing total, kept only when class 1 is strictly more
/// desirable than class 2. Capped at n <= 10.
std::vector<VectorGame> enumerate_t2(int n);

/// Closed form for |enumerate_t2(n)|: Fib(n+6) - (n^2 + 4n + 8) with
/// Fib(1) = Fib(2) = 1. The linear coefficient is calibrated against the
/// exhaustive enumeration for n = 2..10.
std::uint64_t count_formula_t2(int n);

}  // namespace votedim

