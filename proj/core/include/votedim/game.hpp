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

#include <string>
#include <variant>
#include <vector>

#include "votedim/coalition.hpp"
#include "votedim/rational.hpp"
#include "votedim/type_vector.hpp"

namespace votedim {

/// A monotone yes/no voting rule given by its minimal winning coalitions.
/// The stored list must be a nonempty antichain not containing the empty set.
struct ExplicitGame {
  int n = 0;
  std::vector<Coalition> min_winning;
};

/// [quota; w_1, ..., w_n]: a coalition wins iff its total weight reaches the
/// quota. Weights are nonnegative rationals, the quota is positive.
struct WeightedGame {
  Rational quota;
  std::vector<Rational> weights;

  int n() const { return static_cast<int>(weights.size()); }
  Rational weight_of(const Coalition& s) const;
};

/// A game on ordered voter classes, each class internally interchangeable and
/// each class strictly more desirable than the next. Voters 1..n belong to
/// class 1, 2, ... in contiguous blocks of the given sizes. A coalition wins
/// iff its type vector dominates one of the stored shift-minimal winning
/// vectors.
struct VectorGame {
  std::vector<int> class_sizes;
  std::vector<TypeVector> shift_min_winning;

  int n() const;
  int t() const { return static_cast<int>(class_sizes.size()); }
  int class_of(int voter) const;          // 1-based class index
  Coalition class_members(int h) const;   // 1-based class index
  TypeVector type_of(const Coalition& s) const;
};

class Game;

enum class BoolOp { And, Or };

/// Conjunction or disjunction of two or more games over the same voters.
struct Combination {
  BoolOp op = BoolOp::And;
  std::vector<Game> parts;
};

/// A simple game under any of the four representations. Value type; the
/// representation is part of the object's identity (games_equal compares the
/// functions, operator== does not).
class Game {
 public:
  using Repr = std::variant<ExplicitGame, WeightedGame, VectorGame, Combination>;

  Game(ExplicitGame g) : repr_(std::move(g)) {}
  Game(WeightedGame g) : repr_(std::move(g)) {}
  Game(VectorGame g) : repr_(std::move(g)) {}
  Game(Combination g) : repr_(std::move(g)) {}

  int n() const;
  const Repr& repr() const { return repr_; }

  bool is_explicit() const { return std::holds_alternative<ExplicitGame>(repr_); }
  bool is_weighted() const { return std::holds_alternative<WeightedGame>(repr_); }
  bool is_vector() const { return std::holds_alternative<VectorGame>(repr_); }
  bool is_combination() const { return std::holds_alternative<Combination>(repr_); }

  const ExplicitGame& as_explicit() const { return std::get<ExplicitGame>(repr_); }
  const WeightedGame& as_weighted() const { return std::get<WeightedGame>(repr_); }
  const VectorGame& as_vector() const { return std::get<VectorGame>(repr_); }
  const Combination& as_combination() const { return std::get<Combination>(repr_); }

  std::string kind() const;

 private:
  Repr repr_;
};

/// Evaluates the outcome for a coalition: true iff it wins. Works for every
/// representation without enumerating coalitions.
bool evaluate(const Game& game, const Coalition& s);

struct ValidationIssue {
  std::string message;
};

/// Checks the representation invariants (antichain property, index ranges,
/// quota positivity, class strictness, matching part sizes, the grand
/// coalition winning and the empty coalition losing). An empty result means
/// the game is well formed.
std::vector<ValidationIssue> validate(const Game& game);

}  // namespace votedim
