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

#include "votedim/json_io.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json_detail.hpp"
#include "votedim/errors.hpp"
#include "votedim/rational.hpp"

namespace votedim::detail {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing key \"") + key + "\"");
  }
  return j.at(key);
}

int require_int(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_number_integer()) {
    throw ParseError(std::string("key \"") + key + "\" must be an integer");
  }
  return v.get<int>();
}

std::string require_string(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_string()) {
    throw ParseError(std::string("key \"") + key + "\" must be a string");
  }
  return v.get<std::string>();
}

const Json& require_array(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_array()) {
    throw ParseError(std::string("key \"") + key + "\" must be an array");
  }
  return v;
}

int element_int(const Json& v) {
  if (!v.is_number_integer()) throw ParseError("expected an integer element");
  return v.get<int>();
}

}  // namespace

Json coalition_json(const Coalition& c) {
  Json arr = Json::array();
  for (int v : c.members()) arr.push_back(v);
  return arr;
}

Coalition coalition_from(const Json& j, int n) {
  if (!j.is_array()) throw ParseError("a coalition must be an array of voters");
  Coalition c(n);
  for (const Json& e : j) {
    const int voter = element_int(e);
    if (voter < 1 || voter > n) {
      throw ParseError("voter " + std::to_string(voter) + " out of range 1.." +
                       std::to_string(n));
    }
    c.add(voter);
  }
  return c;
}

Json weighted_json(const WeightedGame& g) {
  Json j;
  j["kind"] = "weighted";
  j["quota"] = to_string(g.quota);
  Json weights = Json::array();
  for (const Rational& w : g.weights) weights.push_back(to_string(w));
  j["weights"] = std::move(weights);
  return j;
}

Json vector_json(const VectorGame& g) {
  Json j;
  j["kind"] = "complete";
  j["classes"] = g.class_sizes;
  Json mins = Json::array();
  for (const TypeVector& m : g.shift_min_winning) mins.push_back(m);
  j["shift_min_winning"] = std::move(mins);
  return j;
}

Json game_json(const Game& g) {
  if (g.is_explicit()) {
    const ExplicitGame& e = g.as_explicit();
    Json j;
    j["kind"] = "explicit";
    j["n"] = e.n;
    Json mw = Json::array();
    for (const Coalition& c : e.min_winning) mw.push_back(coalition_json(c));
    j["min_winning"] = std::move(mw);
    return j;
  }
  if (g.is_weighted()) return weighted_json(g.as_weighted());
  if (g.is_vector()) return vector_json(g.as_vector());
  const Combination& comb = g.as_combination();
  Json j;
  j["kind"] = comb.op == BoolOp::And ? "and" : "or";
  Json parts = Json::array();
  for (const Game& part : comb.parts) parts.push_back(game_json(part));
  j["parts"] = std::move(parts);
  return j;
}

Game game_from(const Json& j) {
  if (!j.is_object()) throw ParseError("a game must be a JSON object");
  const std::string kind = require_string(j, "kind");

  if (kind == "explicit") {
    ExplicitGame g;
    g.n = require_int(j, "n");
    if (g.n < 1 || g.n > kMaxVoters) {
      throw ParseError("voter count out of range: " + std::to_string(g.n));
    }
    for (const Json& c : require_array(j, "min_winning")) {
      g.min_winning.push_back(coalition_from(c, g.n));
    }
    return Game(g);
  }

  if (kind == "weighted") {
    WeightedGame g;
    g.quota = parse_rational(require_string(j, "quota"));
    const Json& weights = require_array(j, "weights");
    for (const Json& w : weights) {
      if (!w.is_string()) throw ParseError("weights must be rational strings");
      g.weights.push_back(parse_rational(w.get<std::string>()));
    }
    if (g.n() < 1 || g.n() > kMaxVoters) {
      throw ParseError("voter count out of range: " + std::to_string(g.n()));
    }
    return Game(g);
  }

  if (kind == "complete") {
    VectorGame g;
    for (const Json& s : require_array(j, "classes")) {
      g.class_sizes.push_back(element_int(s));
    }
    if (g.class_sizes.empty()) throw ParseError("classes must be nonempty");
    for (int s : g.class_sizes) {
      if (s < 1) throw ParseError("class sizes must be positive");
    }
    if (g.n() > kMaxVoters) {
      throw ParseError("voter count out of range: " + std::to_string(g.n()));
    }
    for (const Json& row : require_array(j, "shift_min_winning")) {
      if (!row.is_array() || row.size() != g.class_sizes.size()) {
        throw ParseError("each vector needs one entry per class");
      }
      TypeVector m;
      for (const Json& e : row) {
        const int count = element_int(e);
        if (count < 0) throw ParseError("vector entries must be nonnegative");
        m.push_back(count);
      }
      g.shift_min_winning.push_back(std::move(m));
    }
    return Game(g);
  }

  if (kind == "and" || kind == "or") {
    Combination comb;
    comb.op = kind == "and" ? BoolOp::And : BoolOp::Or;
    for (const Json& part : require_array(j, "parts")) {
      comb.parts.push_back(game_from(part));
    }
    if (comb.parts.empty()) throw ParseError("parts must be nonempty");
    return Game(comb);
  }

  throw ParseError("unknown game kind: \"" + kind + "\"");
}

Json transform_json(const TradingTransform& tt) {
  Json j;
  Json xs = Json::array();
  for (const Coalition& c : tt.X) xs.push_back(coalition_json(c));
  Json ys = Json::array();
  for (const Coalition& c : tt.Y) ys.push_back(coalition_json(c));
  j["X"] = std::move(xs);
  j["Y"] = std::move(ys);
  return j;
}

TradingTransform transform_from(const Json& j, int n) {
  if (!j.is_object()) throw ParseError("a certificate must be a JSON object");
  TradingTransform tt;
  for (const Json& c : require_array(j, "X")) tt.X.push_back(coalition_from(c, n));
  for (const Json& c : require_array(j, "Y")) tt.Y.push_back(coalition_from(c, n));
  return tt;
}

Json bundle_json(const FamilyBundle& bundle) {
  Json j;
  j["game"] = game_json(Game(bundle.game));
  Json family = Json::array();
  for (const Coalition& c : bundle.losing_family) family.push_back(coalition_json(c));
  j["losing_family"] = std::move(family);
  Json certs = Json::array();
  for (const TradingTransform& tt : bundle.certificates) certs.push_back(transform_json(tt));
  j["certificates"] = std::move(certs);
  j["claimed_lower_bound"] = bundle.claimed_lower_bound;
  if (bundle.upper_witness) {
    Json witness = Json::array();
    for (const WeightedGame& w : *bundle.upper_witness) witness.push_back(weighted_json(w));
    j["upper_witness"] = std::move(witness);
  } else {
    j["upper_witness"] = nullptr;
  }
  return j;
}

Json report_json(const DimensionReport& report) {
  Json j;
  j["lower_clique"] = report.lower_clique;
  Json witness = Json::array();
  for (const Coalition& c : report.clique_witness) witness.push_back(coalition_json(c));
  j["clique_witness"] = std::move(witness);
  j["upper_maxlosing"] = report.upper_maxlosing;
  j["upper_unit_class"] = report.upper_unit_class;
  if (report.exact) {
    j["exact"] = *report.exact;
  } else {
    j["exact"] = nullptr;
  }
  if (report.witness_representation) {
    Json games = Json::array();
    for (const WeightedGame& w : *report.witness_representation) {
      games.push_back(weighted_json(w));
    }
    j["witness_representation"] = std::move(games);
  } else {
    j["witness_representation"] = nullptr;
  }
  j["budget_exceeded"] = report.budget_exceeded;
  return j;
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace votedim::detail

namespace votedim {

std::string game_to_json(const Game& g) { return detail::dump(detail::game_json(g)); }

Game game_from_json(const std::string& text) {
  return detail::game_from(detail::parse_text(text));
}

Game load_game(const std::string& path) {
  return game_from_json(detail::read_file(path));
}

std::string transform_to_json(const TradingTransform& tt) {
  return detail::dump(detail::transform_json(tt));
}

TradingTransform transform_from_json(const std::string& text, int n) {
  return detail::transform_from(detail::parse_text(text), n);
}

TradingTransform load_transform(const std::string& path, int n) {
  return transform_from_json(detail::read_file(path), n);
}

std::string bundle_to_json(const FamilyBundle& bundle) {
  return detail::dump(detail::bundle_json(bundle));
}

std::string report_to_json(const DimensionReport& report) {
  return detail::dump(detail::report_json(report));
}

}  // namespace votedim
