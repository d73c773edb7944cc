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

// Structured JSON builders shared by json_io.cpp and the CLI. Not installed;
// the public surface works with strings so the vendored parser stays an
// implementation detail.

#pragma once

#include <string>

#include <json.hpp>

#include "votedim/constructions.hpp"
#include "votedim/dimension.hpp"
#include "votedim/game.hpp"
#include "votedim/trading.hpp"

namespace votedim::detail {

using Json = nlohmann::ordered_json;

Json game_json(const Game& g);
Game game_from(const Json& j);

Json coalition_json(const Coalition& c);
Coalition coalition_from(const Json& j, int n);

Json weighted_json(const WeightedGame& g);
Json vector_json(const VectorGame& g);

Json transform_json(const TradingTransform& tt);
TradingTransform transform_from(const Json& j, int n);

Json bundle_json(const FamilyBundle& bundle);
Json report_json(const DimensionReport& report);

/// Single line plus trailing newline.
std::string dump(const Json& j);

/// Wraps the vendor parser, rethrowing as ParseError.
Json parse_text(const std::string& text);

/// Whole file as a string; missing or unreadable paths raise ParseError.
std::string read_file(const std::string& path);

}  // namespace votedim::detail
