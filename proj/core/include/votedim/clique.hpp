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

struct CliqueResult {
  /// Vertex indices of the clique, ascending.
  std::vector<int> members;
  /// True when the search was exhaustive; false means `members` is only a
  /// lower-bound witness found greedily.
  bool exact = false;
};

/// Maximum clique of an undirected graph given as a symmetric adjacency
/// matrix. Graphs up to 200 vertices are solved exactly by branch and bound
/// with a greedy colouring bound over a degeneracy order; larger graphs fall
/// back to a deterministic greedy search.
CliqueResult max_clique(const std::vector<std::vector<char>>& adjacency);

/// Exhaustive search regardless of size. The caller vouches that the
/// instance is tractable.
CliqueResult max_clique_exact(const std::vector<std::vector<char>>& adjacency);

inline constexpr int kExactCliqueLimit = 200;

}  // namespace votedim
