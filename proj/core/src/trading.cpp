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

#include "votedim/trading.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>

#include "votedim/errors.hpp"
#include "votedim/separation.hpp"
#include "votedim/structure.hpp"
#include "votedim/winning_table.hpp"

namespace votedim {

TransformVerdict verify_trading_transform(const Game& g, const TradingTransform& tt) {
  const int n = g.n();
  for (const auto& c : tt.X) {
    if (c.n() != n) throw InvalidArgument("transform coalition sized to a different game");
  }
  for (const auto& c : tt.Y) {
    if (c.n() != n) throw InvalidArgument("transform coalition sized to a different game");
  }
  if (tt.X.size() != tt.Y.size() || tt.X.empty()) return TransformVerdict::Unbalanced;

  std::vector<int> balance(static_cast<std::size_t>(n), 0);
  for (const auto& c : tt.X) {
    for (int v : c.members()) ++balance[static_cast<std::size_t>(v - 1)];
  }
  for (const auto& c : tt.Y) {
    for (int v : c.members()) --balance[static_cast<std::size_t>(v - 1)];
  }
  if (std::any_of(balance.begin(), balance.end(), [](int b) { return b != 0; })) {
    return TransformVerdict::Unbalanced;
  }

  for (const auto& c : tt.X) {
    if (!evaluate(g, c)) return TransformVerdict::BalancedNotCertificate;
  }
  for (const auto& c : tt.Y) {
    if (evaluate(g, c)) return TransformVerdict::BalancedNotCertificate;
  }
  return TransformVerdict::ValidCertificate;
}

namespace {

// Given two fixed coalitions on one side of a length-2 transform, the other
// side is determined up to distributing the symmetric difference: shared
// voters appear in both counterparts, and each remaining voter goes to
// exactly one. Enumerate those splits and test the predicate.
template <typename Pred>
std::optional<std::pair<std::uint32_t, std::uint32_t>> split_search(std::uint32_t a,
                                                                    std::uint32_t b, Pred&& good) {
  const std::uint32_t common = a & b;
  const std::uint32_t delta = a ^ b;
  std::uint32_t part = 0;
  for (;;) {
    const std::uint32_t c1 = common | part;
    const std::uint32_t c2 = common | (delta & ~part);
    if (good(c1, c2)) return std::make_pair(c1, c2);
    if (part == delta) return std::nullopt;
    part = (part - delta) & delta;  // next subset of delta
  }
}

TradingTransform masks_to_transform(int n, std::uint32_t x1, std::uint32_t x2, std::uint32_t y1,
                                    std::uint32_t y2) {
  TradingTransform tt;
  tt.X = {Coalition::from_mask(n, x1), Coalition::from_mask(n, x2)};
  tt.Y = {Coalition::from_mask(n, y1), Coalition::from_mask(n, y2)};
  return tt;
}

// Turns the Farkas multipliers of an infeasible separation into a trading
// transform: accept rows repeated by their (integer-scaled) multipliers form
// the winning side, reject rows the losing side, padded with empty coalitions
// and with voters added to winning entries until every voter balances.
// Supersets of winning coalitions stay winning, so validity is preserved.
TradingTransform transform_from_multipliers(const Game& g, const SeparationOutcome& outcome) {
  std::vector<Rational> values;
  for (const auto& [c, y] : outcome.accept_multipliers) values.push_back(y);
  for (const auto& [c, y] : outcome.reject_multipliers) values.push_back(y);
  const std::vector<Integer> ints = clear_denominators(values);

  const int n = g.n();
  TradingTransform tt;
  std::size_t pos = 0;
  for (const auto& [c, y] : outcome.accept_multipliers) {
    const Integer& count = ints[pos++];
    if (count > 100000) throw CapExceeded("extracted certificate is too long");
    for (Integer i = 0; i < count; ++i) tt.X.push_back(c);
  }
  for (const auto& [c, y] : outcome.reject_multipliers) {
    const Integer& count = ints[pos++];
    for (Integer i = 0; i < count; ++i) tt.Y.push_back(c);
  }
  if (tt.X.size() < tt.Y.size()) {
    throw std::logic_error("Farkas multipliers produced more losing than winning entries");
  }
  while (tt.Y.size() < tt.X.size()) tt.Y.push_back(Coalition(n));

  std::vector<int> deficit(static_cast<std::size_t>(n), 0);
  for (const auto& c : tt.Y) {
    for (int v : c.members()) ++deficit[static_cast<std::size_t>(v - 1)];
  }
  for (const auto& c : tt.X) {
    for (int v : c.members()) --deficit[static_cast<std::size_t>(v - 1)];
  }
  for (int v = 1; v <= n; ++v) {
    int need = deficit[static_cast<std::size_t>(v - 1)];
    if (need < 0) {
      throw std::logic_error("Farkas multipliers overcount a voter on the winning side");
    }
    for (auto& c : tt.X) {
      if (need == 0) break;
      if (!c.contains(v)) {
        c.add(v);
        --need;
      }
    }
    if (need != 0) throw std::logic_error("could not rebalance the extracted transform");
  }
  return tt;
}

}  // namespace

CertificateSearch find_certificate(const Game& g, int max_len) {
  if (g.n() > 16) throw CapExceeded("certificate search is capped at 16 voters");
  if (max_len < 2 || max_len > 4) throw InvalidArgument("max_len must be between 2 and 4");

  SeparationProblem problem;
  problem.n = g.n();
  problem.accept = minimal_winning(g);
  problem.reject = maximal_losing(g);
  const SeparationOutcome outcome = solve_separation(problem);

  CertificateSearch result;
  if (outcome.feasible) {
    result.status = CertificateStatus::NoneExists;
    return result;
  }

  const WinningTable table = WinningTable::build(g);
  std::vector<std::uint32_t> wins;
  wins.reserve(problem.accept.size());
  for (const auto& c : problem.accept) wins.push_back(c.to_mask());
  for (std::size_t i = 0; i < wins.size(); ++i) {
    for (std::size_t j = i + 1; j < wins.size(); ++j) {
      const auto split = split_search(wins[i], wins[j], [&](std::uint32_t y1, std::uint32_t y2) {
        return !table.winning(y1) && !table.winning(y2);
      });
      if (split) {
        result.status = CertificateStatus::Found;
        result.certificate = masks_to_transform(g.n(), wins[i], wins[j], split->first, split->second);
        return result;
      }
    }
  }

  if (max_len < 3) {
    result.status = CertificateStatus::BudgetExceeded;
    return result;
  }

  result.status = CertificateStatus::Found;
  result.certificate = transform_from_multipliers(g, outcome);
  if (verify_trading_transform(g, *result.certificate) != TransformVerdict::ValidCertificate) {
    throw std::logic_error("extracted transform failed verification");
  }
  return result;
}

std::optional<TradingTransform> pair_certificate(const Game& g, const Coalition& t1,
                                                 const Coalition& t2) {
  if (t1.n() != g.n() || t2.n() != g.n()) {
    throw InvalidArgument("coalition sized to a different game");
  }
  const WinningTable table = WinningTable::build(g);
  const std::uint32_t m1 = t1.to_mask(), m2 = t2.to_mask();
  if (table.winning(m1) || table.winning(m2)) {
    throw InvalidArgument("pair_certificate needs two losing coalitions");
  }
  const auto split = split_search(m1, m2, [&](std::uint32_t x1, std::uint32_t x2) {
    return table.winning(x1) && table.winning(x2);
  });
  if (!split) return std::nullopt;
  return masks_to_transform(g.n(), split->first, split->second, m1, m2);
}

}  // namespace votedim
