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

#include <cstddef>
#include <vector>

#include "votedim/rational.hpp"

namespace votedim {

/// A system of linear inequalities coeffs · x >= rhs over free rational
/// variables x_0 .. x_{num_vars-1}.
struct LinearSystem {
  int num_vars = 0;
  std::vector<std::vector<Rational>> coeffs;
  std::vector<Rational> rhs;
  /// Per-variable nonnegativity flags; empty means every variable is free.
  /// A nonnegative variable needs no explicit x >= 0 row, and the Farkas
  /// condition for its column relaxes from = 0 to <= 0.
  std::vector<char> nonneg;

  /// Appends the constraint row · x >= b. The row must have num_vars entries.
  void add_ge(std::vector<Rational> row, Rational b);

  bool is_nonneg(int var) const { return !nonneg.empty() && nonneg[static_cast<std::size_t>(var)]; }
};

struct LpResult {
  bool feasible = false;
  /// When feasible: one exact solution.
  std::vector<Rational> point;
  /// When infeasible: multipliers y >= 0 with sum_i y_i * coeffs_i = 0
  /// componentwise and sum_i y_i * rhs_i > 0, which certifies that no x
  /// satisfies the system.
  std::vector<Rational> farkas;
};

/// Decides feasibility exactly by phase-1 simplex with Bland's rule. The
/// returned witness (solution or Farkas multipliers) is re-verified against
/// the input before returning.
LpResult solve_feasibility(const LinearSystem& sys);

}  // namespace votedim


