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

#include "votedim/coalition.hpp"
#include "votedim/game.hpp"

namespace votedim_tests {

inline votedim::Coalition coal(int n, const std::vector<int>& members) {
  return votedim::Coalition::from_members(n, members);
}

inline votedim::WeightedGame wg(int quota, const std::vector<int>& weights) {
  votedim::WeightedGame g;
  g.quota = quota;
  g.weights.assign(weights.begin(), weights.end());
  return g;
}

inline votedim::Game intersection(const std::vector<votedim::WeightedGame>& games) {
  votedim::Combination c;
  c.op = votedim::BoolOp::And;
  for (const votedim::WeightedGame& g : games) c.parts.emplace_back(g);
  return votedim::Game(c);
}

inline votedim::Game game_union(const std::vector<votedim::WeightedGame>& games) {
  votedim::Combination c;
  c.op = votedim::BoolOp::Or;
  for (const votedim::WeightedGame& g : games) c.parts.emplace_back(g);
  return votedim::Game(c);
}

}  // namespace votedim_tests
