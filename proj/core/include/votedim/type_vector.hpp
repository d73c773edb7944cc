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

namespace votedim {

/// Per-class member counts of a coalition in a game whose voters fall into
/// ordered equivalence classes: entry h is how many class-(h+1) voters the
/// coalition contains.
using TypeVector = std::vector<int>;

/// The shift (partial) order: a >= b iff every prefix sum of a is at least
/// the corresponding prefix sum of b. Replacing a voter by a weaker one or
/// dropping a voter moves a coalition's type strictly down in this order.
bool dominates(const TypeVector& a, const TypeVector& b);

bool strictly_dominates(const TypeVector& a, const TypeVector& b);

std::vector<long long> prefix_sums(const TypeVector& v);

/// Iterates the full grid {0..sizes[0]} x ... x {0..sizes[t-1]} in
/// lexicographic order, calling fn on each vector. The grid must have at most
/// `kGridScanBudget` cells.
inline constexpr long long kGridScanBudget = 10'000'000;

long long grid_cell_count(const std::vector<int>& sizes);  // throws CapExceeded over budget

template <typename Fn>
void for_each_grid_vector(const std::vector<int>& sizes, Fn&& fn) {
  grid_cell_count(sizes);  // enforce the scan budget
  TypeVector m(sizes.size(), 0);
  for (;;) {
    fn(const_cast<const TypeVector&>(m));
    int h = static_cast<int>(sizes.size()) - 1;
    while (h >= 0 && m[h] == sizes[h]) {
      m[h] = 0;
      --h;
    }
    if (h < 0) break;
    ++m[h];
  }
}

}  // namespace votedim
