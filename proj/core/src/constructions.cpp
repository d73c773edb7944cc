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

#include "votedim/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "votedim/codes.hpp"
#include "votedim/errors.hpp"
#include "votedim/vector_game.hpp"

namespace votedim {

namespace {

WeightedGame uniform_threshold(int n, int quota) {
  WeightedGame g;
  g.quota = quota;
  g.weights.assign(static_cast<std::size_t>(n), Rational(1));
  return g;
}

std::vector<int> support(const std::vector<int>& bits) {
  std::vector<int> positions;
  for (std::size_t p = 0; p < bits.size(); ++p) {
    if (bits[p]) positions.push_back(static_cast<int>(p));
  }
  return positions;
}

/// First `count` weight-w words of length n in colex order, as ascending
/// 0-based position vectors.
std::vector<std::vector<int>> first_colex_words(int n, int w, int count) {
  std::vector<std::vector<int>> words;
  std::vector<int> word(static_cast<std::size_t>(w));
  std::iota(word.begin(), word.end(), 0);
  for (int produced = 0; produced < count; ++produced) {
    words.push_back(word);
    std::size_t i = 0;
    while (i < word.size()) {
      const int limit = (i + 1 < word.size()) ? word[i + 1] : n;
      if (word[i] + 1 < limit) break;
      ++i;
    }
    if (i == word.size()) {
      if (produced + 1 < count) {
        throw std::logic_error("requested more words than exist");
      }
      break;
    }
    ++word[i];
    for (std::size_t j = 0; j < i; ++j) word[j] = static_cast<int>(j);
  }
  return words;
}

long long binomial(int n, int w) {
  if (w < 0 || w > n) return 0;
  long long result = 1;
  for (int i = 1; i <= w; ++i) result = result * (n - w + i) / i;
  return result;
}

std::vector<int> sorted_difference(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

Game example_game(const std::string& id) {
  if (id == "1") {
    ExplicitGame g;
    g.n = 4;
    g.min_winning = {Coalition::from_members(4, {1, 2}), Coalition::from_members(4, {3, 4})};
    return Game(g);
  }
  if (id == "2") {
    VectorGame g;
    g.class_sizes = {2, 4};
    g.shift_min_winning = {{2, 0}, {0, 4}};
    return Game(g);
  }
  if (id == "lisbon-shape") {
    Combination both{BoolOp::And,
                     {Game(uniform_threshold(3, 2)), Game(uniform_threshold(3, 2))}};
    return Game(Combination{BoolOp::Or, {Game(both), Game(uniform_threshold(3, 3))}});
  }
  throw InvalidArgument("unknown example id: " + id);
}

VectorGame staircase_game(int class_size) {
  if (class_size < 5) {
    throw InvalidArgument("staircase_game needs class_size >= 5");
  }
  const std::vector<int> sizes(4, class_size);
  return from_shift_max_losing(sizes, {TypeVector{4, 4, 4, 4}});
}

FamilyBundle parametric_bundle(int d, int n2) {
  if (d < 2) throw InvalidArgument("parametric_bundle needs d >= 2");
  if (n2 < 2 * d) throw InvalidArgument("parametric_bundle needs n2 >= 2d");

  FamilyBundle bundle;
  bundle.game.class_sizes = {d, n2};
  bundle.game.shift_min_winning = {{2, 0}, {0, 4}};
  bundle.claimed_lower_bound = d;

  const int n = d + n2;
  for (int i = 1; i <= d; ++i) {
    bundle.losing_family.push_back(
        Coalition::from_members(n, {i, d + 2 * i - 1, d + 2 * i}));
  }

  std::vector<WeightedGame> witness;
  for (int i = 1; i <= d; ++i) {
    WeightedGame w;
    w.quota = 8;
    w.weights.reserve(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v) {
      if (v == i) {
        w.weights.emplace_back(3);
      } else if (v <= d) {
        w.weights.emplace_back(5);
      } else {
        w.weights.emplace_back(2);
      }
    }
    witness.push_back(std::move(w));
  }
  bundle.upper_witness = std::move(witness);

  for (int i = 1; i <= d; ++i) {
    for (int j = i + 1; j <= d; ++j) {
      TradingTransform tt;
      tt.X = {Coalition::from_members(n, {i, j}),
              Coalition::from_members(
                  n, {d + 2 * i - 1, d + 2 * i, d + 2 * j - 1, d + 2 * j})};
      tt.Y = {bundle.losing_family[static_cast<std::size_t>(i - 1)],
              bundle.losing_family[static_cast<std::size_t>(j - 1)]};
      bundle.certificates.push_back(std::move(tt));
    }
  }
  return bundle;
}

FamilyBundle code_family_bundle(int k) {
  if (k < 2) throw InvalidArgument("code_family_bundle needs k >= 2");
  const int half = 2 * k;
  const int n = 4 * k;

  const ConstantWeightCode code = graham_sloane_code(half, k);
  const long long target = binomial(half, k - 1);
  const int d = static_cast<int>(
      std::min<long long>(static_cast<long long>(code.codewords.size()), target));

  FamilyBundle bundle;
  bundle.game.class_sizes = {half, half};
  bundle.game.shift_min_winning = {{k, 0}, {0, half}};
  bundle.claimed_lower_bound = d;

  if (is_winning_vector(bundle.game, TypeVector{k - 1, k})) {
    throw std::logic_error("losing-family type unexpectedly wins");
  }

  const std::vector<std::vector<int>> first_parts = first_colex_words(half, k - 1, d);
  std::vector<std::vector<int>> second_parts;
  second_parts.reserve(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    second_parts.push_back(support(code.codewords[static_cast<std::size_t>(i)]));
  }

  for (int i = 0; i < d; ++i) {
    Coalition t(n);
    for (int p : first_parts[static_cast<std::size_t>(i)]) t.add(p + 1);
    for (int p : second_parts[static_cast<std::size_t>(i)]) t.add(half + p + 1);
    bundle.losing_family.push_back(t);
  }

  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      const std::vector<int> only_i =
          sorted_difference(first_parts[static_cast<std::size_t>(i)],
                            first_parts[static_cast<std::size_t>(j)]);
      const std::vector<int> only_j =
          sorted_difference(second_parts[static_cast<std::size_t>(j)],
                            second_parts[static_cast<std::size_t>(i)]);
      if (only_i.empty() || only_j.size() < 2) {
        throw std::logic_error("code distance too small for a certificate");
      }
      const int a = only_i.front() + 1;
      const int b1 = half + only_j[0] + 1;
      const int b2 = half + only_j[1] + 1;

      Coalition x1 = bundle.losing_family[static_cast<std::size_t>(i)];
      x1.remove(a);
      x1.add(b1);
      x1.add(b2);
      Coalition x2 = bundle.losing_family[static_cast<std::size_t>(j)];
      x2.remove(b1);
      x2.remove(b2);
      x2.add(a);

      TradingTransform tt;
      tt.X = {x1, x2};
      tt.Y = {bundle.losing_family[static_cast<std::size_t>(i)],
              bundle.losing_family[static_cast<std::size_t>(j)]};
      bundle.certificates.push_back(std::move(tt));
    }
  }
  return bundle;
}

}  // namespace votedim
