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

#include "votedim/type_vector.hpp"

#include <string>

#include "votedim/errors.hpp"

namespace votedim {

bool dominates(const TypeVector& a, const TypeVector& b) {
  if (a.size() != b.size()) {
    throw InvalidArgument("type vectors have different class counts");
  }
  long long sa = 0, sb = 0;
  for (std::size_t h = 0; h < a.size(); ++h) {
    sa += a[h];
    sb += b[h];
    if (sa < sb) return false;
  }
  return true;
}

bool strictly_dominates(const TypeVector& a, const TypeVector& b) {
  return a != b && dominates(a, b);
}

std::vector<long long> prefix_sums(const TypeVector& v) {
  std::vector<long long> out;
  out.reserve(v.size());
  long long s = 0;
  for (int x : v) {
    s += x;
    out.push_back(s);
  }
  return out;
}

long long grid_cell_count(const std::vector<int>& sizes) {
  long long cells = 1;
  for (int s : sizes) {
    if (s < 0) throw InvalidArgument("negative class size");
    cells *= s + 1;
    if (cells > kGridScanBudget) {
      throw CapExceeded("type-vector grid has more than " +
                        std::to_string(kGridScanBudget) + " cells");
    }
  }
  return cells;
}

}  // namespace votedim
