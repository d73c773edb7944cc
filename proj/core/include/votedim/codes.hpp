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

/// A binary code whose codewords all have the same number of ones.
struct ConstantWeightCode {
  int length = 0;
  int weight = 0;
  /// Each codeword is a 0/1 vector of `length` entries with `weight` ones.
  std::vector<std::vector<int>> codewords;
  /// Smallest pairwise Hamming distance; 2 * weight (the largest value any
  /// pair of equal-weight words can attain) when fewer than two codewords
  /// leave it unconstrained.
  int min_distance = 0;
};

/// Graham-Sloane construction: all weight-w words of length n are split by
/// the sum of their one-positions (0-based) modulo n, and the largest class
/// is returned (ties: smallest residue), codewords in colex order. Any two
/// words in one class differ in more than one swapped position, so the
/// minimum distance is at least 4, and the class size is at least
/// C(n,w)/n by pigeonhole.
ConstantWeightCode graham_sloane_code(int n, int w);

/// Exact maximum number of weight-w words of length n with pairwise Hamming
/// distance at least d, found by exhaustive clique search over all C(n,w)
/// words. Requires C(n,w) <= 5000.
int brute_force_A(int n, int d, int w);

inline constexpr long long kCodeWordLimit = 5000;

}  // namespace votedim
