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

#include "votedim/lp.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>

#include "votedim/errors.hpp"

namespace votedim {

void LinearSystem::add_ge(std::vector<Rational> row, Rational b) {
  if (static_cast<int>(row.size()) != num_vars) {
    throw InvalidArgument("constraint row has wrong length");
  }
  coeffs.push_back(std::move(row));
  rhs.push_back(std::move(b));
}

namespace {

// Phase-1 tableau for { x : A x >= b } with a mix of free and nonnegative
// variables. Free variables are split x = u - v with u, v >= 0; each row gets
// a surplus, is flipped to a nonnegative right-hand side, and starts with an
// artificial in the basis:
//
//   sign_i * (a_i x) - sign_i * s_i + z_i = sign_i * b_i >= 0.
//
// Driving sum z_i to zero proves feasibility; a positive optimum yields exact
// Farkas multipliers through the artificial columns' reduced costs.
class PhaseOneTableau {
 public:
  explicit PhaseOneTableau(const LinearSystem& sys)
      : k_(sys.num_vars), m_(static_cast<int>(sys.coeffs.size())) {
    v_col_.assign(static_cast<std::size_t>(k_), -1);
    int next = k_;
    for (int j = 0; j < k_; ++j) {
      if (!sys.is_nonneg(j)) v_col_[static_cast<std::size_t>(j)] = next++;
    }
    surplus_base_ = next;
    artificial_base_ = next + m_;
    cols_ = artificial_base_ + m_ + 1;

    rows_.assign(static_cast<std::size_t>(m_),
                 std::vector<Rational>(static_cast<std::size_t>(cols_)));
    obj_.assign(static_cast<std::size_t>(cols_), Rational(0));
    basis_.resize(static_cast<std::size_t>(m_));

    for (int i = 0; i < m_; ++i) {
      auto& row = rows_[static_cast<std::size_t>(i)];
      const int sign = sgn(sys.rhs[static_cast<std::size_t>(i)]) < 0 ? -1 : 1;
      for (int j = 0; j < k_; ++j) {
        const Rational& a = sys.coeffs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (sgn(a) == 0) continue;
        Rational signed_a = sign < 0 ? Rational(-a) : a;
        if (v_col_[static_cast<std::size_t>(j)] >= 0) {
          row[static_cast<std::size_t>(v_col_[static_cast<std::size_t>(j)])] = -signed_a;
        }
        row[static_cast<std::size_t>(j)] = std::move(signed_a);
      }
      row[static_cast<std::size_t>(surplus_base_ + i)] = Rational(-sign);
      row[static_cast<std::size_t>(artificial_base_ + i)] = 1;
      row[static_cast<std::size_t>(cols_ - 1)] =
          sign < 0 ? Rational(-sys.rhs[static_cast<std::size_t>(i)])
                   : sys.rhs[static_cast<std::size_t>(i)];
      basis_[static_cast<std::size_t>(i)] = artificial_base_ + i;
    }

    // Objective: minimize the artificial sum. Pricing the initial basis out
    // keeps obj_ equal to the reduced costs, with -value in the last slot.
    for (int i = 0; i < m_; ++i) obj_[static_cast<std::size_t>(artificial_base_ + i)] = 1;
    for (int i = 0; i < m_; ++i) {
      for (int c = 0; c < cols_; ++c) {
        obj_[static_cast<std::size_t>(c)] -=
            rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
      }
    }
  }

  void run() {
    for (;;) {
      int enter = -1;
      for (int c = 0; c < cols_ - 1; ++c) {
        if (sgn(obj_[static_cast<std::size_t>(c)]) < 0) {
          enter = c;
          break;
        }
      }
      if (enter < 0) return;

      int leave = -1;
      Rational best;
      for (int i = 0; i < m_; ++i) {
        const Rational& coef = rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(enter)];
        if (sgn(coef) <= 0) continue;
        Rational ratio =
            rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(cols_ - 1)] / coef;
        if (leave < 0 || ratio < best ||
            (ratio == best &&
             basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(leave)])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave < 0) throw std::logic_error("phase-1 objective unbounded below");
      pivot(leave, enter);
    }
  }

  Rational objective_value() const { return -obj_[static_cast<std::size_t>(cols_ - 1)]; }

  std::vector<Rational> extract_point() const {
    std::vector<Rational> x(static_cast<std::size_t>(k_), Rational(0));
    for (int i = 0; i < m_; ++i) {
      const int b = basis_[static_cast<std::size_t>(i)];
      const Rational& val = rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(cols_ - 1)];
      if (b < k_) {
        x[static_cast<std::size_t>(b)] += val;
      } else if (b < surplus_base_) {
        for (int j = 0; j < k_; ++j) {
          if (v_col_[static_cast<std::size_t>(j)] == b) {
            x[static_cast<std::size_t>(j)] -= val;
            break;
          }
        }
      }
    }
    return x;
  }

  // Simplex multipliers pi_i = 1 - reduced_cost(z_i); the Farkas multiplier
  // of original row i is sign_i * pi_i.
  std::vector<Rational> extract_farkas(const LinearSystem& sys) const {
    std::vector<Rational> y(static_cast<std::size_t>(m_));
    for (int i = 0; i < m_; ++i) {
      Rational pi = Rational(1) - obj_[static_cast<std::size_t>(artificial_base_ + i)];
      const int sign = sgn(sys.rhs[static_cast<std::size_t>(i)]) < 0 ? -1 : 1;
      y[static_cast<std::size_t>(i)] = sign < 0 ? Rational(-pi) : std::move(pi);
    }
    return y;
  }

 private:
  void pivot(int leave, int enter) {
    auto& prow = rows_[static_cast<std::size_t>(leave)];
    const Rational inv = Rational(1) / prow[static_cast<std::size_t>(enter)];
    for (int c = 0; c < cols_; ++c) prow[static_cast<std::size_t>(c)] *= inv;
    prow[static_cast<std::size_t>(enter)] = 1;

    for (int i = 0; i < m_; ++i) {
      if (i == leave) continue;
      auto& row = rows_[static_cast<std::size_t>(i)];
      const Rational factor = row[static_cast<std::size_t>(enter)];
      if (sgn(factor) == 0) continue;
      for (int c = 0; c < cols_; ++c) {
        if (sgn(prow[static_cast<std::size_t>(c)]) != 0) {
          row[static_cast<std::size_t>(c)] -= factor * prow[static_cast<std::size_t>(c)];
        }
      }
      row[static_cast<std::size_t>(enter)] = 0;
    }
    const Rational factor = obj_[static_cast<std::size_t>(enter)];
    if (sgn(factor) != 0) {
      for (int c = 0; c < cols_; ++c) {
        if (sgn(prow[static_cast<std::size_t>(c)]) != 0) {
          obj_[static_cast<std::size_t>(c)] -= factor * prow[static_cast<std::size_t>(c)];
        }
      }
      obj_[static_cast<std::size_t>(enter)] = 0;
    }
    basis_[static_cast<std::size_t>(leave)] = enter;
  }

  int k_ = 0;
  int m_ = 0;
  int cols_ = 0;
  int surplus_base_ = 0;
  int artificial_base_ = 0;
  std::vector<int> v_col_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> obj_;
  std::vector<int> basis_;
};

void verify_point(const LinearSystem& sys, const std::vector<Rational>& x) {
  for (int j = 0; j < sys.num_vars; ++j) {
    if (sys.is_nonneg(j) && sgn(x[static_cast<std::size_t>(j)]) < 0) {
      throw std::logic_error("simplex violated a nonnegativity bound");
    }
  }
  for (std::size_t i = 0; i < sys.coeffs.size(); ++i) {
    Rational lhs(0);
    for (std::size_t j = 0; j < x.size(); ++j) lhs += sys.coeffs[i][j] * x[j];
    if (lhs < sys.rhs[i]) throw std::logic_error("simplex returned an invalid solution");
  }
}

void verify_farkas(const LinearSystem& sys, const std::vector<Rational>& y) {
  Rational total(0);
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (sgn(y[i]) < 0) throw std::logic_error("negative Farkas multiplier");
    total += y[i] * sys.rhs[i];
  }
  if (sgn(total) <= 0) throw std::logic_error("Farkas multipliers do not certify infeasibility");
  for (int j = 0; j < sys.num_vars; ++j) {
    Rational col(0);
    for (std::size_t i = 0; i < y.size(); ++i) {
      col += y[i] * sys.coeffs[i][static_cast<std::size_t>(j)];
    }
    const int s = sgn(col);
    if (sys.is_nonneg(j) ? s > 0 : s != 0) {
      throw std::logic_error("Farkas combination does not dominate the origin");
    }
  }
}

}  // namespace

LpResult solve_feasibility(const LinearSystem& sys) {
  if (!sys.nonneg.empty() && static_cast<int>(sys.nonneg.size()) != sys.num_vars) {
    throw InvalidArgument("nonneg flags sized differently from num_vars");
  }
  LpResult result;
  if (sys.coeffs.empty()) {
    result.feasible = true;
    result.point.assign(static_cast<std::size_t>(sys.num_vars), Rational(0));
    return result;
  }

  PhaseOneTableau tableau(sys);
  tableau.run();
  if (sgn(tableau.objective_value()) == 0) {
    result.feasible = true;
    result.point = tableau.extract_point();
    verify_point(sys, result.point);
  } else {
    result.feasible = false;
    result.farkas = tableau.extract_farkas(sys);
    verify_farkas(sys, result.farkas);
  }
  return result;
}

}  // namespace votedim
