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
#include <string>
#include <vector>

#include "votedim/game.hpp"
#include "votedim/trading.hpp"

namespace votedim {

/// Catalog of small reference games:
///  - "1": four voters, minimal winning {{1,2},{3,4}}; not complete.
///  - "2": two classes of sizes 2 and 4, shift-minimal winning (2,0),(0,4).
///  - "lisbon-shape": the double-majority shape (v1 AND v2) OR v3 with
///    placeholder majority/unanimity leaves on three voters. Only the
///    Boolean structure is meaningful; the thresholds are not real-world
///    data.
/// Throws InvalidArgument for any other id.
Game example_game(const std::string& id);

/// Four equal classes; a coalition wins exactly when, for some j, its count
/// of voters in the first j classes reaches 4j + 1. Built from the single
/// shift-maximal losing vector (4,4,4,4). Requires class_size >= 5 so the
/// grand coalition wins.
VectorGame staircase_game(int class_size = 20);

/// A game family together with the material witnessing its dimension bounds:
/// a list of losing coalitions no two of which are co-rejectable, one
/// trading-transform certificate per unordered pair proving that, and
/// (when the family has one) an intersection-of-weighted-games witness for
/// the matching upper bound.
struct FamilyBundle {
  VectorGame game;
  std::vector<Coalition> losing_family;
  /// Certificates for pairs (1,2), (1,3), ..., in ascending pair order.
  std::vector<TradingTransform> certificates;
  int claimed_lower_bound = 0;
  std::optional<std::vector<WeightedGame>> upper_witness;
};

/// Two-class family with dimension exactly d: n1 = d, shift-minimal winning
/// (2,0) and (0,4). The losing family is T_i = {i, d+2i-1, d+2i}; the upper
/// witness is the d games [8; 3 on voter i, 5 on the rest of class 1, 2 on
/// class 2]. Requires d >= 2 and n2 >= 2d.
FamilyBundle parametric_bundle(int d, int n2);

/// Two classes of size 2k with shift-minimal winning (k,0) and (0,2k). The
/// losing family pairs the first d weight-(k-1) words (colex) on class 1
/// with the codewords of graham_sloane_code(2k, k) on class 2, where
/// d = min(code size, C(2k, k-1)); the code's distance 4 makes every pair of
/// T_i's conflict, so the dimension is at least d, which grows exponentially
/// in k. Requires k >= 2 and C(2k,k) <= 5000.
FamilyBundle code_family_bundle(int k);

}  // namespace votedim
