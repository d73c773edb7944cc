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

#include "votedim/game.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "votedim/errors.hpp"

namespace votedim {

Rational WeightedGame::weight_of(const Coalition& s) const {
  Rational total = 0;
  for (int v : s.members()) total += weights[static_cast<std::size_t>(v - 1)];
  return total;
}

int VectorGame::n() const {
  return std::accumulate(class_sizes.begin(), class_sizes.end(), 0);
}

int VectorGame::class_of(int voter) const {
  int upto = 0;
  for (int h = 0; h < t(); ++h) {
    upto += class_sizes[static_cast<std::size_t>(h)];
    if (voter <= upto) return h + 1;
  }
  throw InvalidArgument("voter " + std::to_string(voter) + " beyond the last class");
}

Coalition VectorGame::class_members(int h) const {
  if (h < 1 || h > t()) throw InvalidArgument("class index out of range");
  int first = 1;
  for (int g = 1; g < h; ++g) first += class_sizes[static_cast<std::size_t>(g - 1)];
  Coalition c(n());
  for (int v = first; v < first + class_sizes[static_cast<std::size_t>(h - 1)]; ++v) c.add(v);
  return c;
}

TypeVector VectorGame::type_of(const Coalition& s) const {
  TypeVector m(static_cast<std::size_t>(t()), 0);
  for (int v : s.members()) ++m[static_cast<std::size_t>(class_of(v) - 1)];
  return m;
}

int Game::n() const {
  return std::visit(
      [](const auto& g) -> int {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, ExplicitGame>) {
          return g.n;
        } else if constexpr (std::is_same_v<T, WeightedGame>) {
          return g.n();
        } else if constexpr (std::is_same_v<T, VectorGame>) {
          return g.n();
        } else {
          return g.parts.empty() ? 0 : g.parts.front().n();
        }
      },
      repr_);
}

std::string Game::kind() const {
  if (is_explicit()) return "explicit";
  if (is_weighted()) return "weighted";
  if (is_vector()) return "complete";
  return as_combination().op == BoolOp::And ? "and" : "or";
}

bool evaluate(const Game& game, const Coalition& s) {
  if (s.n() != game.n()) {
    throw InvalidArgument("coalition is over a different voter set than the game");
  }
  return std::visit(
      [&](const auto& g) -> bool {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, ExplicitGame>) {
          for (const auto& w : g.min_winning) {
            if (w.subset_of(s)) return true;
          }
          return false;
        } else if constexpr (std::is_same_v<T, WeightedGame>) {
          return g.weight_of(s) >= g.quota;
        } else if constexpr (std::is_same_v<T, VectorGame>) {
          const TypeVector m = g.type_of(s);
          for (const auto& mw : g.shift_min_winning) {
            if (dominates(m, mw)) return true;
          }
          return false;
        } else {
          const bool conj = g.op == BoolOp::And;
          for (const auto& part : g.parts) {
            const bool r = evaluate(part, s);
            if (conj && !r) return false;
            if (!conj && r) return true;
          }
          return conj;
        }
      },
      game.repr());
}

namespace {

void validate_into(const Game& game, std::vector<ValidationIssue>& issues);

void note(std::vector<ValidationIssue>& issues, std::string msg) {
  issues.push_back(ValidationIssue{std::move(msg)});
}

void validate_explicit(const ExplicitGame& g, std::vector<ValidationIssue>& issues) {
  if (g.n < 1 || g.n > kMaxVoters) {
    note(issues, "voter count must be between 1 and 128");
    return;
  }
  if (g.min_winning.empty()) {
    note(issues, "no winning coalitions: the grand coalition must win");
    return;
  }
  for (const auto& w : g.min_winning) {
    if (w.n() != g.n) {
      note(issues, "minimal winning coalition over a different voter set");
      return;
    }
    if (w.empty()) note(issues, "the empty coalition may not win");
  }
  std::set<std::vector<int>> seen;
  for (const auto& w : g.min_winning) {
    if (!seen.insert(w.members()).second) {
      note(issues, "duplicate minimal winning coalition");
    }
  }
  for (std::size_t i = 0; i < g.min_winning.size(); ++i) {
    for (std::size_t j = 0; j < g.min_winning.size(); ++j) {
      if (i != j && g.min_winning[i] != g.min_winning[j] &&
          g.min_winning[i].subset_of(g.min_winning[j])) {
        note(issues, "minimal winning coalitions are not an antichain");
        return;
      }
    }
  }
}

void validate_weighted(const WeightedGame& g, std::vector<ValidationIssue>& issues) {
  if (g.weights.empty() || g.n() > kMaxVoters) {
    note(issues, "voter count must be between 1 and 128");
    return;
  }
  if (g.quota <= 0) {
    note(issues, "quota must be positive (otherwise the empty coalition wins)");
  }
  Rational total = 0;
  for (const auto& w : g.weights) {
    if (w < 0) note(issues, "weights must be nonnegative");
    total += w;
  }
  if (total < g.quota) {
    note(issues, "total weight below the quota: the grand coalition must win");
  }
}

// Classes h and h+1 collapse when winning never depends on which of the two
// classes a voter comes from; the representation then overstates t.
bool adjacent_classes_distinct(const VectorGame& g, int h) {
  bool distinct = false;
  for_each_grid_vector(g.class_sizes, [&](const TypeVector& m) {
    if (distinct) return;
    if (m[static_cast<std::size_t>(h)] == 0 ||
        m[static_cast<std::size_t>(h + 1)] == g.class_sizes[static_cast<std::size_t>(h + 1)]) {
      return;
    }
    TypeVector shifted = m;
    --shifted[static_cast<std::size_t>(h)];
    ++shifted[static_cast<std::size_t>(h + 1)];
    const auto winning = [&](const TypeVector& v) {
      for (const auto& mw : g.shift_min_winning) {
        if (dominates(v, mw)) return true;
      }
      return false;
    };
    if (winning(m) && !winning(shifted)) distinct = true;
  });
  return distinct;
}

void validate_vector(const VectorGame& g, std::vector<ValidationIssue>& issues) {
  if (g.class_sizes.empty()) {
    note(issues, "a class game needs at least one class");
    return;
  }
  for (int s : g.class_sizes) {
    if (s < 1) {
      note(issues, "class sizes must be positive");
      return;
    }
  }
  if (g.n() > kMaxVoters) {
    note(issues, "voter count must be between 1 and 128");
    return;
  }
  if (g.shift_min_winning.empty()) {
    note(issues, "no winning vectors: the grand coalition must win");
    return;
  }
  for (const auto& m : g.shift_min_winning) {
    if (static_cast<int>(m.size()) != g.t()) {
      note(issues, "winning vector has the wrong class count");
      return;
    }
    for (int h = 0; h < g.t(); ++h) {
      if (m[static_cast<std::size_t>(h)] < 0 ||
          m[static_cast<std::size_t>(h)] > g.class_sizes[static_cast<std::size_t>(h)]) {
        note(issues, "winning vector outside the class-size box");
        return;
      }
    }
  }
  for (const auto& m : g.shift_min_winning) {
    if (std::all_of(m.begin(), m.end(), [](int x) { return x == 0; })) {
      note(issues, "the empty coalition may not win");
    }
  }
  for (std::size_t i = 0; i < g.shift_min_winning.size(); ++i) {
    for (std::size_t j = 0; j < g.shift_min_winning.size(); ++j) {
      if (i != j && dominates(g.shift_min_winning[i], g.shift_min_winning[j])) {
        note(issues, "shift-minimal winning vectors are not a shift antichain");
        return;
      }
    }
  }
  for (int h = 0; h + 1 < g.t(); ++h) {
    if (!adjacent_classes_distinct(g, h)) {
      note(issues, "classes " + std::to_string(h + 1) + " and " + std::to_string(h + 2) +
                       " are interchangeable: class count overstated");
    }
  }
}

void validate_combination(const Combination& g, std::vector<ValidationIssue>& issues) {
  if (g.parts.size() < 2) {
    note(issues, "a combination needs at least two parts");
    return;
  }
  const int n = g.parts.front().n();
  for (const auto& part : g.parts) {
    if (part.n() != n) {
      note(issues, "combination parts are over different voter sets");
      return;
    }
    if (part.is_vector()) {
      note(issues, "combination leaves must be weighted or explicit games");
    }
    validate_into(part, issues);
  }
  // The parts individually win the grand coalition and lose the empty one,
  // hence so does any AND/OR of them; nothing further to check here.
}

void validate_into(const Game& game, std::vector<ValidationIssue>& issues) {
  std::visit(
      [&](const auto& g) {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, ExplicitGame>) {
          validate_explicit(g, issues);
        } else if constexpr (std::is_same_v<T, WeightedGame>) {
          validate_weighted(g, issues);
        } else if constexpr (std::is_same_v<T, VectorGame>) {
          validate_vector(g, issues);
        } else {
          validate_combination(g, issues);
        }
      },
      game.repr());
}

}  // namespace

std::vector<ValidationIssue> validate(const Game& game) {
  std::vector<ValidationIssue> issues;
  validate_into(game, issues);
  return issues;
}

}  // namespace votedim
