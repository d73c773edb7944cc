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

#include "votedim/clique.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

#include "votedim/errors.hpp"

namespace votedim {

namespace {

void validate_adjacency(const std::vector<std::vector<char>>& adj) {
  const std::size_t n = adj.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (adj[i].size() != n) {
      throw InvalidArgument("adjacency matrix is not square");
    }
    if (adj[i][i]) {
      throw InvalidArgument("adjacency matrix has a self-loop");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if ((adj[i][j] != 0) != (adj[j][i] != 0)) {
        throw InvalidArgument("adjacency matrix is not symmetric");
      }
    }
  }
}

/// Peel vertices of minimum remaining degree (ties by smallest index).
std::vector<int> degeneracy_order(const std::vector<std::vector<char>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> degree(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (adj[i][j]) ++degree[i];
    }
  }
  std::vector<char> removed(n, 0);
  std::vector<int> order;
  order.reserve(n);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int i = 0; i < n; ++i) {
      if (!removed[i] && (pick < 0 || degree[i] < degree[pick])) pick = i;
    }
    order.push_back(pick);
    removed[pick] = 1;
    for (int j = 0; j < n; ++j) {
      if (!removed[j] && adj[pick][j]) --degree[j];
    }
  }
  return order;
}

/// Greedy clique: grow from every seed, scanning vertices in a fixed order
/// (descending degree, ties by index) and keep the largest result.
std::vector<int> greedy_clique(const std::vector<std::vector<char>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> by_degree(n);
  for (int i = 0; i < n; ++i) by_degree[i] = i;
  std::vector<int> degree(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (adj[i][j]) ++degree[i];
    }
  }
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](int a, int b) { return degree[a] > degree[b]; });

  std::vector<int> best;
  for (int seed : by_degree) {
    std::vector<int> clique{seed};
    for (int v : by_degree) {
      if (v == seed) continue;
      bool ok = true;
      for (int u : clique) {
        if (!adj[v][u]) {
          ok = false;
          break;
        }
      }
      if (ok) clique.push_back(v);
    }
    if (clique.size() > best.size()) best = std::move(clique);
  }
  std::sort(best.begin(), best.end());
  return best;
}

class BitGraph {
 public:
  explicit BitGraph(const std::vector<std::vector<char>>& adj)
      : n_(static_cast<int>(adj.size())), words_((n_ + 63) / 64) {
    rows_.assign(static_cast<std::size_t>(n_) * words_, 0);
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        if (adj[i][j]) {
          rows_[static_cast<std::size_t>(i) * words_ + j / 64] |=
              std::uint64_t{1} << (j % 64);
        }
      }
    }
  }

  bool adjacent(int i, int j) const {
    return (rows_[static_cast<std::size_t>(i) * words_ + j / 64] >>
            (j % 64)) &
           1;
  }

 private:
  int n_;
  int words_;
  std::vector<std::uint64_t> rows_;
};

class CliqueSolver {
 public:
  CliqueSolver(const std::vector<std::vector<char>>& adj,
               std::vector<int> seed)
      : graph_(adj), best_(std::move(seed)) {
    std::vector<int> order = degeneracy_order(adj);
    // Expanding from the last-peeled (densest) end first tightens the bound
    // sooner.
    std::reverse(order.begin(), order.end());
    expand(order);
    std::sort(best_.begin(), best_.end());
  }

  std::vector<int> take() { return std::move(best_); }

 private:
  void expand(std::vector<int> candidates) {
    while (!candidates.empty()) {
      std::vector<int> colored;
      std::vector<int> color_of;
      color_sort(candidates, colored, color_of);
      const int v = colored.back();
      const int bound =
          static_cast<int>(current_.size()) + color_of.back();
      if (bound <= static_cast<int>(best_.size())) return;

      current_.push_back(v);
      std::vector<int> next;
      next.reserve(colored.size());
      for (int u : colored) {
        if (u != v && graph_.adjacent(u, v)) next.push_back(u);
      }
      if (next.empty()) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(std::move(next));
      }
      current_.pop_back();

      candidates = std::move(colored);
      candidates.pop_back();
    }
  }

  /// Greedy colouring: place each candidate into the first colour class
  /// containing none of its neighbours, then emit classes in order. The
  /// colour number of a vertex bounds the clique extendable through it.
  void color_sort(const std::vector<int>& candidates,
                  std::vector<int>& colored, std::vector<int>& color_of) {
    std::vector<std::vector<int>> classes;
    for (int v : candidates) {
      std::size_t c = 0;
      for (; c < classes.size(); ++c) {
        bool clash = false;
        for (int u : classes[c]) {
          if (graph_.adjacent(u, v)) {
            clash = true;
            break;
          }
        }
        if (!clash) break;
      }
      if (c == classes.size()) classes.emplace_back();
      classes[c].push_back(v);
    }
    colored.clear();
    color_of.clear();
    for (std::size_t c = 0; c < classes.size(); ++c) {
      for (int v : classes[c]) {
        colored.push_back(v);
        color_of.push_back(static_cast<int>(c) + 1);
      }
    }
  }

  BitGraph graph_;
  std::vector<int> best_;
  std::vector<int> current_;
};

}  // namespace

CliqueResult max_clique(const std::vector<std::vector<char>>& adjacency) {
  validate_adjacency(adjacency);
  CliqueResult result;
  if (adjacency.empty()) {
    result.exact = true;
    return result;
  }
  std::vector<int> greedy = greedy_clique(adjacency);
  if (static_cast<int>(adjacency.size()) > kExactCliqueLimit) {
    result.members = std::move(greedy);
    result.exact = false;
    return result;
  }
  CliqueSolver solver(adjacency, std::move(greedy));
  result.members = solver.take();
  result.exact = true;
  return result;
}

CliqueResult max_clique_exact(const std::vector<std::vector<char>>& adjacency) {
  validate_adjacency(adjacency);
  CliqueResult result;
  result.exact = true;
  if (adjacency.empty()) return result;
  CliqueSolver solver(adjacency, greedy_clique(adjacency));
  result.members = solver.take();
  return result;
}

}  // namespace votedim
