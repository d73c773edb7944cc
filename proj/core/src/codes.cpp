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

#include "votedim/codes.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "votedim/clique.hpp"
#include "votedim/errors.hpp"

namespace votedim {

namespace {

/// C(n, w), saturating just above `cap` so callers can test the limit
/// without overflow.
long long binomial_capped(int n, int w, long long cap) {
  if (w < 0 || w > n) return 0;
  long long result = 1;
  for (int i = 1; i <= w; ++i) {
    result = result * (n - w + i) / i;
    if (result > cap) return cap + 1;
  }
  return result;
}

/// All w-subsets of {0..n-1} as ascending position vectors, in colex order
/// (sorted by largest element, then recursively).
std::vector<std::vector<int>> colex_words(int n, int w) {
  std::vector<std::vector<int>> words;
  if (w == 0) {
    words.emplace_back();
    return words;
  }
  std::vector<int> current(static_cast<std::size_t>(w));
  for (int i = 0; i < w; ++i) current[static_cast<std::size_t>(i)] = i;
  for (;;) {
    words.push_back(current);
    int pos = w - 1;
    while (pos >= 0 &&
           current[static_cast<std::size_t>(pos)] ==
               n - w + pos) {
      --pos;
    }
    if (pos < 0) break;
    ++current[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < w; ++i) {
      current[static_cast<std::size_t>(i)] = current[static_cast<std::size_t>(i - 1)] + 1;
    }
  }
  std::sort(words.begin(), words.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              for (std::size_t i = a.size(); i-- > 0;) {
                if (a[i] != b[i]) return a[i] < b[i];
              }
              return false;
            });
  return words;
}

int intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
  int count = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++count;
      ++i;
      ++j;
    } else if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return count;
}

int hamming_distance(const std::vector<int>& a, const std::vector<int>& b) {
  return static_cast<int>(a.size() + b.size()) - 2 * intersection_size(a, b);
}

std::vector<int> to_bits(int n, const std::vector<int>& positions) {
  std::vector<int> bits(static_cast<std::size_t>(n), 0);
  for (int p : positions) bits[static_cast<std::size_t>(p)] = 1;
  return bits;
}

void check_word_budget(int n, int w) {
  if (n < 1 || w < 0 || w > n) {
    throw InvalidArgument("weight must lie between 0 and the code length");
  }
  if (binomial_capped(n, w, kCodeWordLimit) > kCodeWordLimit) {
    throw CapExceeded("too many weight-w words to enumerate");
  }
}

}  // namespace

ConstantWeightCode graham_sloane_code(int n, int w) {
  check_word_budget(n, w);
  const std::vector<std::vector<int>> words = colex_words(n, w);

  std::vector<std::vector<std::size_t>> buckets(static_cast<std::size_t>(n));
  for (std::size_t idx = 0; idx < words.size(); ++idx) {
    long long sum = 0;
    for (int p : words[idx]) sum += p;
    buckets[static_cast<std::size_t>(sum % n)].push_back(idx);
  }
  std::size_t best = 0;
  for (std::size_t r = 1; r < buckets.size(); ++r) {
    if (buckets[r].size() > buckets[best].size()) best = r;
  }

  ConstantWeightCode code;
  code.length = n;
  code.weight = w;
  for (std::size_t idx : buckets[best]) {
    code.codewords.push_back(to_bits(n, words[idx]));
  }

  if (buckets[best].size() < 2) {
    code.min_distance = 2 * w;
    return code;
  }
  int min_distance = 2 * w;
  for (std::size_t i = 0; i < buckets[best].size(); ++i) {
    for (std::size_t j = i + 1; j < buckets[best].size(); ++j) {
      min_distance = std::min(
          min_distance, hamming_distance(words[buckets[best][i]], words[buckets[best][j]]));
    }
  }
  if (min_distance < 4) {
    throw std::logic_error("residue class contains a distance-2 pair");
  }
  code.min_distance = min_distance;
  return code;
}

int brute_force_A(int n, int d, int w) {
  check_word_budget(n, w);
  if (d < 1) throw InvalidArgument("distance must be positive");
  const std::vector<std::vector<int>> words = colex_words(n, w);
  const std::size_t m = words.size();
  std::vector<std::vector<char>> compatible(m, std::vector<char>(m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (hamming_distance(words[i], words[j]) >= d) {
        compatible[i][j] = compatible[j][i] = 1;
      }
    }
  }
  return static_cast<int>(max_clique_exact(compatible).members.size());
}

}  // namespace votedim
