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

#include <optional>
#include <vector>

#include "votedim/coalition.hpp"
#include "votedim/game.hpp"

namespace votedim {

/// Two equal-length coalition sequences with identical per-voter counts.
/// When every X_i wins and every Y_i loses, the transform certifies that the
/// game has no weighted representation.
struct TradingTransform {
  std::vector<Coalition> X;
  std::vector<Coalition> Y;

  int length() const { return static_cast<int>(X.size()); }
};

enum class TransformVerdict { ValidCertificate, BalancedNotCertificate, Unbalanced };

/// Three-way check: per-voter balance first, then the winning/losing split.
/// Throws InvalidArgument when a coalition is sized to a different game.
TransformVerdict verify_trading_transform(const Game& g, const TradingTransform& tt);

enum class CertificateStatus { Found, NoneExists, BudgetExceeded };

struct CertificateSearch {
  CertificateStatus status = CertificateStatus::NoneExists;
  std::optional<TradingTransform> certificate;
};

/// Searches for a certificate of non-weightedness. A weighted game yields
/// NoneExists. Otherwise a length-2 certificate is sought by enumerating
/// pairs of minimal winning coalitions and all balanced redistributions;
/// with max_len >= 3 an arbitrary-length certificate is extracted from the
/// separation LP's Farkas multipliers as a fallback, so the search cannot
/// miss. BudgetExceeded is returned only when max_len caps the search at
/// length 2 and no such short certificate exists. Requires n <= 16 and
/// 2 <= max_len <= 4.
CertificateSearch find_certificate(const Game& g, int max_len);

/// A length-2 certificate whose losing side is exactly (t1, t2), if one
/// exists. Such a certificate proves that no weighted game can accept all
/// winning coalitions while rejecting both t1 and t2.
std::optional<TradingTransform> pair_certificate(const Game& g, const Coalition& t1,
                                                 const Coalition& t2);

}  // namespace votedim
