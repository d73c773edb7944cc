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

#include <string>

#include "votedim/constructions.hpp"
#include "votedim/dimension.hpp"
#include "votedim/game.hpp"
#include "votedim/trading.hpp"

namespace votedim {

/// Canonical single-line JSON, terminated by a newline. Kinds: "explicit",
/// "weighted" (quota and weights as normalized rational strings), "complete",
/// "and"/"or" with recursive parts. Emitting and re-parsing is the identity,
/// and equal values serialize to identical bytes.
std::string game_to_json(const Game& g);

/// Parses the canonical format. Schema violations, unnormalized rationals
/// and out-of-range voter indices raise ParseError; the semantic game
/// invariants are left to validate() so callers can report them.
Game game_from_json(const std::string& text);

Game load_game(const std::string& path);

/// {"X":[[...]],"Y":[[...]]} with coalitions as ascending voter lists.
std::string transform_to_json(const TradingTransform& tt);

/// `n` is the ambient voter count the coalition lists are read against.
TradingTransform transform_from_json(const std::string& text, int n);

TradingTransform load_transform(const std::string& path, int n);

std::string bundle_to_json(const FamilyBundle& bundle);

std::string report_to_json(const DimensionReport& report);

}  // namespace votedim
