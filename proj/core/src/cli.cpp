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

#include "votedim/cli.hpp"

#include <algorithm>
#include <cstddef>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "json_detail.hpp"
#include "votedim/constructions.hpp"
#include "votedim/dimension.hpp"
#include "votedim/errors.hpp"
#include "votedim/game.hpp"
#include "votedim/json_io.hpp"
#include "votedim/rational.hpp"
#include "votedim/separation.hpp"
#include "votedim/structure.hpp"
#include "votedim/trading.hpp"
#include "votedim/type_vector.hpp"
#include "votedim/vector_game.hpp"
#include "votedim/version.hpp"

namespace votedim {
namespace {

using detail::Json;

using Row = std::pair<std::string, std::string>;

std::string render_table(const std::string& title, const std::vector<Row>& rows) {
  std::size_t width = 0;
  for (const Row& row : rows) width = std::max(width, row.first.size());
  std::ostringstream out;
  out << title << '\n';
  for (const Row& row : rows) {
    out << "  " << row.first << std::string(width - row.first.size() + 2, ' ') << row.second
        << '\n';
  }
  return out.str();
}

Json base_payload(const char* command) {
  Json j;
  j["version"] = kVersion;
  j["command"] = command;
  return j;
}

CommandResult finish(CommandStatus status, const Json& payload, std::string human) {
  CommandResult result;
  result.status = status;
  result.payload = detail::dump(payload);
  result.human_text = std::move(human);
  return result;
}

CommandResult failure(const char* command, CommandStatus status, const std::string& message) {
  Json j = base_payload(command);
  j["error"] = message;
  return finish(status, j, "error: " + message + "\n");
}

std::string coalition_text(const Coalition& c) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int v : c.members()) {
    if (!first) out << ',';
    out << v;
    first = false;
  }
  out << '}';
  return out.str();
}

std::string type_text(const TypeVector& m) {
  std::ostringstream out;
  out << '(';
  for (std::size_t h = 0; h < m.size(); ++h) {
    if (h > 0) out << ',';
    out << m[h];
  }
  out << ')';
  return out.str();
}

std::string weighted_text(const WeightedGame& w) {
  std::ostringstream out;
  out << '[' << to_string(w.quota) << ';';
  for (std::size_t i = 0; i < w.weights.size(); ++i) {
    out << (i == 0 ? " " : ", ") << to_string(w.weights[i]);
  }
  out << ']';
  return out.str();
}

Json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(static_cast<long long>(v.get_si()));
  return Json(v.get_str());
}

Json coalition_list_json(const std::vector<Coalition>& list) {
  Json out = Json::array();
  for (const Coalition& c : list) out.push_back(detail::coalition_json(c));
  return out;
}

/// Extremal antichain sizes of a vector game, counted on the type grid so
/// they stay available far beyond the coalition-enumeration cap.
struct GridCounts {
  Integer minimal_winning;
  Integer maximal_losing;
};

Integer type_population(const std::vector<int>& sizes, const TypeVector& m) {
  Integer total = 1;
  Integer factor;
  for (std::size_t h = 0; h < sizes.size(); ++h) {
    mpz_bin_uiui(factor.get_mpz_t(), static_cast<unsigned long>(sizes[h]),
                 static_cast<unsigned long>(m[h]));
    total *= factor;
  }
  return total;
}

GridCounts vector_grid_counts(const VectorGame& g) {
  const std::vector<int>& sizes = g.class_sizes;
  const int t = static_cast<int>(sizes.size());
  std::vector<long long> stride(static_cast<std::size_t>(t), 1);
  for (int h = t - 2; h >= 0; --h) {
    stride[static_cast<std::size_t>(h)] =
        stride[static_cast<std::size_t>(h) + 1] * (sizes[static_cast<std::size_t>(h) + 1] + 1);
  }
  std::vector<char> win(static_cast<std::size_t>(grid_cell_count(sizes)));
  long long next = 0;
  for_each_grid_vector(sizes, [&](const TypeVector& m) {
    win[static_cast<std::size_t>(next++)] = is_winning_vector(g, m) ? 1 : 0;
  });

  GridCounts out;
  next = 0;
  for_each_grid_vector(sizes, [&](const TypeVector& m) {
    const long long idx = next++;
    bool boundary = true;
    if (win[static_cast<std::size_t>(idx)]) {
      for (int h = 0; h < t && boundary; ++h) {
        if (m[static_cast<std::size_t>(h)] > 0 &&
            win[static_cast<std::size_t>(idx - stride[static_cast<std::size_t>(h)])]) {
          boundary = false;
        }
      }
      if (boundary) out.minimal_winning += type_population(sizes, m);
    } else {
      for (int h = 0; h < t && boundary; ++h) {
        if (m[static_cast<std::size_t>(h)] < sizes[static_cast<std::size_t>(h)] &&
            !win[static_cast<std::size_t>(idx + stride[static_cast<std::size_t>(h)])]) {
          boundary = false;
        }
      }
      if (boundary) out.maximal_losing += type_population(sizes, m);
    }
  });
  return out;
}

std::string json_value_text(const Json& v, const std::string& when_null) {
  if (v.is_null()) return when_null;
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

/// Bounds-only reply for games past the method's caps: exit code 2, the
/// trivial lower bound, and the maximal-losing count whenever it can still
/// be obtained (type grid for vector games, enumeration otherwise).
CommandResult dimension_refusal(Json j, const Game& g, const std::string& message) {
  j["error"] = message;
  j["budget_exceeded"] = true;
  j["lower"] = 1;
  Json upper;
  if (g.is_vector()) {
    try {
      upper = integer_json(vector_grid_counts(g.as_vector()).maximal_losing);
    } catch (const CapExceeded&) {
    }
  } else {
    try {
      upper = static_cast<long long>(maximal_losing(g).size());
    } catch (const CapExceeded&) {
    }
  }
  j["upper"] = upper;
  const std::vector<Row> rows{
      {"refused", message},
      {"lower bound", "1"},
      {"upper bound", json_value_text(upper, "not computed (size cap)")},
  };
  return finish(CommandStatus::BudgetExceeded, j, render_table("dimension", rows));
}

std::vector<int> parse_voter_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const std::size_t begin = item.find_first_not_of(" \t");
    const std::size_t end = item.find_last_not_of(" \t");
    if (begin == std::string::npos) throw InvalidArgument("empty entry in voter list");
    item = item.substr(begin, end - begin + 1);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw InvalidArgument("bad voter in list: " + item);
    }
    if (used != item.size()) throw InvalidArgument("bad voter in list: " + item);
    out.push_back(value);
  }
  if (out.empty()) throw InvalidArgument("empty voter list");
  return out;
}

}  // namespace

CommandResult cmd_analyze(const std::string& file) {
  static constexpr const char* kCmd = "analyze";
  try {
    const Game g = load_game(file);
    Json j = base_payload(kCmd);
    j["file"] = file;
    j["kind"] = g.kind();
    j["n"] = g.n();

    const std::vector<ValidationIssue> issues = validate(g);
    j["valid"] = issues.empty();
    Json issue_list = Json::array();
    for (const ValidationIssue& issue : issues) issue_list.push_back(issue.message);
    j["issues"] = issue_list;

    std::vector<Row> rows{{"file", file},
                          {"kind", g.kind()},
                          {"voters", std::to_string(g.n())},
                          {"valid", issues.empty() ? "yes" : "no"}};
    if (!issues.empty()) {
      for (const ValidationIssue& issue : issues) rows.emplace_back("issue", issue.message);
      return finish(CommandStatus::InvalidInput, j, render_table("analyze", rows));
    }

    Json min_count;
    Json max_count;
    if (g.is_vector()) {
      const GridCounts counts = vector_grid_counts(g.as_vector());
      min_count = integer_json(counts.minimal_winning);
      max_count = integer_json(counts.maximal_losing);
    } else {
      try {
        min_count = static_cast<long long>(minimal_winning(g).size());
        max_count = static_cast<long long>(maximal_losing(g).size());
      } catch (const CapExceeded&) {
        min_count = nullptr;
        max_count = nullptr;
      }
    }
    j["minimal_winning_count"] = min_count;
    j["maximal_losing_count"] = max_count;

    Json complete;
    Json classes;
    Json class_sizes;
    Json vector_form;
    std::string class_text = "not computed (size cap)";
    std::string shift_text = "n/a";
    try {
      const DesirabilityReport report = desirability(g);
      complete = report.complete;
      classes = Json::array();
      class_sizes = Json::array();
      std::ostringstream sizes_text;
      for (std::size_t h = 0; h < report.classes.size(); ++h) {
        classes.push_back(report.classes[h]);
        class_sizes.push_back(report.classes[h].size());
        sizes_text << (h == 0 ? "" : ", ") << report.classes[h].size();
      }
      class_text = std::to_string(report.classes.size()) + " (sizes " + sizes_text.str() + ")";
      if (report.complete) {
        const VectorGame vform = from_oracle(g);
        vector_form = detail::vector_json(vform);
        std::ostringstream sv;
        const std::size_t shown = std::min<std::size_t>(vform.shift_min_winning.size(), 6);
        for (std::size_t i = 0; i < shown; ++i) {
          sv << (i == 0 ? "" : " ") << type_text(vform.shift_min_winning[i]);
        }
        if (shown < vform.shift_min_winning.size()) {
          sv << " ... (" << vform.shift_min_winning.size() << " total)";
        }
        shift_text = sv.str();
      }
    } catch (const CapExceeded&) {
    }
    j["complete"] = complete;
    j["classes"] = classes;
    j["class_sizes"] = class_sizes;
    j["vector_form"] = vector_form;

    rows.emplace_back("minimal winning", json_value_text(min_count, "not computed (size cap)"));
    rows.emplace_back("maximal losing", json_value_text(max_count, "not computed (size cap)"));
    rows.emplace_back("complete",
                      complete.is_null() ? "not computed (size cap)"
                                         : (complete.get<bool>() ? "yes" : "no"));
    rows.emplace_back("classes", class_text);
    rows.emplace_back("shift-min winning", shift_text);
    return finish(CommandStatus::Ok, j, render_table("analyze", rows));
  } catch (const ParseError& e) {
    return failure(kCmd, CommandStatus::InvalidInput, e.what());
  } catch (const InvalidArgument& e) {
    return failure(kCmd, CommandStatus::InvalidInput, e.what());
  } catch (const CapExceeded& e) {
    return failure(kCmd, CommandStatus::BudgetExceeded, e.what());
  }
}

CommandResult cmd_dimension(const std::string& file, const DimensionRequest& request) {
  static constexpr const char* kCmd = "dimension";
  try {
    const Game g = load_game(file);
    const std::vector<ValidationIssue> issues = validate(g);
    if (!issues.empty()) {
      return failure(kCmd, CommandStatus::InvalidInput, "invalid game: " + issues.front().message);
    }

    Json j = base_payload(kCmd);
    j["file"] = file;
    j["method"] = request.method;
    j["threads"] = request.threads;
    j["budget_seconds"] = request.budget_seconds ? Json(*request.budget_seconds) : Json(nullptr);

    if (request.method == "exact") {
      DimensionOptions options;
      options.budget_seconds = request.budget_seconds;
      options.threads = request.threads;
      DimensionReport report;
      try {
        report = dimension_exact(g, options);
      } catch (const CapExceeded& e) {
        return dimension_refusal(std::move(j), g, e.what());
      }
      j.update(detail::report_json(report));

      std::vector<Row> rows{{"method", "exact"}};
      if (report.exact) {
        rows.emplace_back("dimension", std::to_string(*report.exact));
      } else {
        rows.emplace_back("dimension", "not settled (budget exhausted)");
      }
      rows.emplace_back("lower (clique)", std::to_string(report.lower_clique));
      rows.emplace_back("upper (maximal losing)", std::to_string(report.upper_maxlosing));
      rows.emplace_back("upper (unit class)", std::to_string(report.upper_unit_class));
      if (report.witness_representation) {
        for (const WeightedGame& w : *report.witness_representation) {
          rows.emplace_back("witness", weighted_text(w));
        }
      }
      const CommandStatus status =
          report.budget_exceeded ? CommandStatus::BudgetExceeded : CommandStatus::Ok;
      return finish(status, j, render_table("dimension", rows));
    }

    if (request.method == "lower") {
      CliqueBound bound;
      try {
        bound = dimension_lower_clique(g, request.threads);
      } catch (const CapExceeded& e) {
        return dimension_refusal(std::move(j), g, e.what());
      }
      j["lower_clique"] = bound.size;
      j["clique_witness"] = coalition_list_json(bound.witness);
      j["clique_exact"] = bound.exact;

      std::vector<Row> rows{{"method", "lower"},
                            {"dimension >=", std::to_string(bound.size)},
                            {"clique search", bound.exact ? "exact" : "greedy"}};
      for (const Coalition& c : bound.witness) rows.emplace_back("clique member", coalition_text(c));
      return finish(CommandStatus::Ok, j, render_table("dimension", rows));
    }

    Json upper_maxlosing;
    Json upper_unit;
    if (g.is_vector() && g.n() > 24) {
      upper_maxlosing = integer_json(vector_grid_counts(g.as_vector()).maximal_losing);
    } else {
      try {
        const std::vector<Coalition> mls = maximal_losing(g);
        upper_maxlosing = static_cast<long long>(mls.size());
        const DesirabilityReport report = desirability(g);
        long long best = static_cast<long long>(mls.size());
        for (std::size_t i = 1; i <= report.classes.size(); ++i) {
          const std::size_t count = unit_class_representation(g, static_cast<int>(i)).size();
          best = std::min(best, static_cast<long long>(count));
        }
        upper_unit = best;
      } catch (const CapExceeded& e) {
        return dimension_refusal(std::move(j), g, e.what());
      }
    }
    j["upper_maxlosing"] = upper_maxlosing;
    j["upper_unit_class"] = upper_unit;

    const std::vector<Row> rows{
        {"method", "upper"},
        {"upper (maximal losing)", json_value_text(upper_maxlosing, "not computed (size cap)")},
        {"upper (unit class)", json_value_text(upper_unit, "not computed (size cap)")},
    };
    return finish(CommandStatus::Ok, j, render_table("dimension", rows));
  } catch (const ParseError& e) {
    return failure(kCmd, CommandStatus::InvalidInput, e.what());
  } catch (const InvalidArgument& e) {
    return failure(kCmd, CommandStatus::InvalidInput, e.what());
  } catch (const CapExceeded& e) {
    return failure(kCmd, CommandStatus::BudgetExceeded, e.what());
  }
}

CommandResult cmd_construct(const ConstructRequest& request) {
  static constexpr const char* kCmd = "construct";
  try {
    const std::string& family = request.family;
    const auto reject = [&](bool given, const char* flag) -> std::optional<CommandResult> {
      if (!given) return std::nullopt;
      return failure(kCmd, CommandStatus::InvalidInput,
                     std::string(flag) + " does not apply to family " + family);
    };

    Json j = base_payload(kCmd);
    j["family"] = family;
    Json params = Json::object();
    Json document;
    Json claimed;
    Json witness_count;
    Json certificate_count;
    Json losing_count;
    std::vector<Row> rows{{"family", family}};

    const auto fill_bundle = [&](const FamilyBundle& bundle) {
      document = detail::bundle_json(bundle);
      claimed = bundle.claimed_lower_bound;
      certificate_count = static_cast<long long>(bundle.certificates.size());
      losing_count = static_cast<long long>(bundle.losing_family.size());
      if (bundle.upper_witness) {
        witness_count = static_cast<long long>(bundle.upper_witness->size());
      }
      rows.emplace_back("voters", std::to_string(bundle.game.n()));
      rows.emplace_back("claimed lower bound", std::to_string(bundle.claimed_lower_bound));
      rows.emplace_back("losing family", std::to_string(bundle.losing_family.size()));
      rows.emplace_back("certificates", std::to_string(bundle.certificates.size()));
      rows.emplace_back("witness games",
                        bundle.upper_witness ? std::to_string(bundle.upper_witness->size())
                                             : std::string("none"));
    };

    if (family == "example1" || family == "example2") {
      for (const auto& [given, flag] :
           std::vector<std::pair<bool, const char*>>{{request.d.has_value(), "--d"},
                                                     {request.n2.has_value(), "--n2"},
                                                     {request.k.has_value(), "--k"},
                                                     {request.class_size.has_value(),
                                                      "--class-size"}}) {
        if (auto bad = reject(given, flag)) return *bad;
      }
      const Game g = example_game(family == "example1" ? "1" : "2");
      document = detail::game_json(g);
      rows.emplace_back("voters", std::to_string(g.n()));
      rows.emplace_back("kind", g.kind());
    } else if (family == "prop-ne") {
      for (const auto& [given, flag] : std::vector<std::pair<bool, const char*>>{
               {request.d.has_value(), "--d"},
               {request.n2.has_value(), "--n2"},
               {request.k.has_value(), "--k"}}) {
        if (auto bad = reject(given, flag)) return *bad;
      }
      const int class_size = request.class_size.value_or(20);
      params["class_size"] = class_size;
      const VectorGame g = staircase_game(class_size);
      document = detail::game_json(Game(g));
      rows.emplace_back("class size", std::to_string(class_size));
      rows.emplace_back("voters", std::to_string(g.n()));
    } else if (family == "parametric") {
      for (const auto& [given, flag] : std::vector<std::pair<bool, const char*>>{
               {request.k.has_value(), "--k"},
               {request.class_size.has_value(), "--class-size"}}) {
        if (auto bad = reject(given, flag)) return *bad;
      }
      if (!request.d) {
        return failure(kCmd, CommandStatus::InvalidInput, "--d is required for family parametric");
      }
      const int d = *request.d;
      const int n2 = request.n2.value_or(2 * d);
      params["d"] = d;
      params["n2"] = n2;
      fill_bundle(parametric_bundle(d, n2));
    } else if (family == "theorem") {
      for (const auto& [given, flag] : std::vector<std::pair<bool, const char*>>{
               {request.d.has_value(), "--d"},
               {request.n2.has_value(), "--n2"},
               {request.class_size.has_value(), "--class-size"}}) {
        if (auto bad = reject(given, flag)) return *bad;
      }
      if (!request.k) {
        return failure(kCmd, CommandStatus::InvalidInput, "--k is required for family theorem");
      }
      params["k"] = *request.k;
      fill_bundle(code_family_bundle(*request.k));
    } else {
      return failure(kCmd, CommandStatus::InvalidInput, "unknown family: " + family);
    }

    j["params"] = params;
    j["claimed_lower_bound"] = claimed;
    j["losing_family"] = losing_count;
    j["certificates"] = certificate_count;
    j["witness_games"] = witness_count;
    j["document"] = document;
    j["output"] = request.output_path.empty() ? Json() : Json(request.output_path);
    if (!request.output_path.empty()) {
      std::ofstream out(request.output_path, std::ios::binary);
      out << detail::dump(document);
      if (!out) {
        return failure(kCmd, CommandStatus::InvalidInput,
                       "cannot write file: " + request.output_path);
      }
      rows.emplace_back("wrote", request.output_path);
    }
    return finish(CommandStatus::Ok, j, render_table("construct", rows));
  } catch (const ParseError& e) {
    return failure(kCmd, CommandStatus::InvalidInput, e.what());
  } catch (const InvalidArgument& e) {
    return failure(kCmd, CommandStatus::InvalidInput, e.what());
  } catch (const CapExceeded& e) {
    return failure(kCmd, CommandStatus::BudgetExceeded, e.what());
  }
}

CommandResult cmd_verify(const std::string& file, const VerifyRequest& request) {
  static constexpr const char* kCmd = "verify";
  try {
    const int modes = static_cast<int>(!request.certificate_path.empty()) +
                      static_cast<int>(!request.equals_path.empty()) +
                      static_cast<int>(!request.ordered_separation.empty());
    if (modes != 1) {
      return failure(kCmd, CommandStatus::InvalidInput,
                     "exactly one of --certificate, --equals, --ordered-separation is required");
    }

    const Game g = load_game(file);
    const std::vector<ValidationIssue> issues = validate(g);
    if (!issues.empty()) {
      return failure(kCmd, CommandStatus::InvalidInput, "invalid game: " + issues.front().message);
    }

    Json j = base_payload(kCmd);
    j["file"] = file;

    if (!request.certificate_path.empty()) {
      j["mode"] = "certificate";
      j["certificate"] = request.certificate_path;
      const TradingTransform tt = load_transform(request.certificate_path, g.n());
      const TransformVerdict verdict = verify_trading_transform(g, tt);
      const char* text = verdict == TransformVerdict::ValidCertificate ? "valid-certificate"
                         : verdict == TransformVerdict::BalancedNotCertificate
                             ? "balanced-not-certificate"
                             : "unbalanced";
      j["length"] = tt.length();
      j["verdict"] = text;
      const std::vector<Row> rows{{"mode", "certificate"},
                                  {"length", std::to_string(tt.length())},
                                  {"verdict", text}};
      return finish(CommandStatus::Ok, j, render_table("verify", rows));
    }

    if (!request.equals_path.empty()) {
      j["mode"] = "equals";
      j["other"] = request.equals_path;
      const Game other = load_game(request.equals_path);
      if (other.n() != g.n()) {
        return failure(kCmd, CommandStatus::InvalidInput,
                       "voter counts differ: " + std::to_string(g.n()) + " vs " +
                           std::to_string(other.n()));
      }
      const bool equal = games_equal(g, other);
      j["equal"] = equal;
      const std::vector<Row> rows{{"mode", "equals"}, {"equal", equal ? "yes" : "no"}};
      return finish(CommandStatus::Ok, j, render_table("verify", rows));
    }

    j["mode"] = "ordered-separation";
    if (!g.is_vector()) {
      return failure(kCmd, CommandStatus::InvalidInput,
                     "ordered separation needs a game in class (\"complete\") form");
    }
    const VectorGame& vg = g.as_vector();
    const Coalition target = Coalition::from_members(g.n(), parse_voter_list(request.ordered_separation));
    j["coalition"] = detail::coalition_json(target);
    const std::optional<WeightedGame> witness = ordered_separate(vg, target);
    j["feasible"] = witness.has_value();
    j["witness"] = witness ? detail::weighted_json(*witness) : Json();
    std::vector<Row> rows{{"mode", "ordered-separation"},
                          {"coalition", coalition_text(target)},
                          {"feasible", witness ? "yes" : "no"}};
    if (witness) rows.emplace_back("witness", weighted_text(*witness));
    return finish(CommandStatus::Ok, j, render_table("verify", rows));
  } catch (const ParseError& e) {
    return failure(kCmd, CommandStatus::InvalidInput, e.what());
  } catch (const InvalidArgument& e) {
    return failure(kCmd, CommandStatus::InvalidInput, e.what());
  } catch (const CapExceeded& e) {
    return failure(kCmd, CommandStatus::BudgetExceeded, e.what());
  }
}

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"exact tools for simple games: structure, weightedness, dimension, constructions"};
  app.name("votedim");
  app.set_version_flag("--version", std::string("votedim ") + kVersion);
  app.fallthrough(true);

  bool json_out = false;
  app.add_flag("--json", json_out, "print the JSON payload instead of the table");
  int threads = 1;
  app.add_option("--threads", threads, "worker threads for the pairwise feasibility phase")
      ->envname("VOTEDIM_THREADS")
      ->check(CLI::PositiveNumber);
  app.require_subcommand(1);

  std::string analyze_file;
  CLI::App* analyze = app.add_subcommand("analyze", "report a game's structure");
  analyze->add_option("file", analyze_file, "game JSON file")->required();

  std::string dimension_file;
  DimensionRequest dimension_request;
  CLI::App* dimension = app.add_subcommand("dimension", "bound or compute the dimension");
  dimension->add_option("file", dimension_file, "game JSON file")->required();
  dimension->add_option("--method", dimension_request.method, "exact, lower, or upper")
      ->check(CLI::IsMember({"exact", "lower", "upper"}));
  dimension->add_option("--budget", dimension_request.budget_seconds,
                        "wall-clock budget in seconds")
      ->check(CLI::PositiveNumber);

  ConstructRequest construct_request;
  CLI::App* construct = app.add_subcommand("construct", "emit a built-in game or family bundle");
  construct
      ->add_option("family", construct_request.family,
                   "example1, example2, prop-ne, parametric, or theorem")
      ->required();
  construct->add_option("--d", construct_request.d, "number of witness games (parametric)");
  construct->add_option("--n2", construct_request.n2,
                        "size of the second class (parametric, default 2d)");
  construct->add_option("--k", construct_request.k, "code weight parameter (theorem)");
  construct->add_option("--class-size", construct_request.class_size,
                        "voters per class (prop-ne, default 20)");
  construct->add_option("-o,--output", construct_request.output_path,
                        "also write the emitted document to this file");

  std::string verify_file;
  VerifyRequest verify_request;
  CLI::App* verify =
      app.add_subcommand("verify", "check a certificate, game equality, or ordered separation");
  verify->add_option("file", verify_file, "game JSON file")->required();
  CLI::Option* opt_certificate = verify->add_option("--certificate", verify_request.certificate_path,
                                                    "trading transform JSON file");
  CLI::Option* opt_equals =
      verify->add_option("--equals", verify_request.equals_path, "second game JSON file");
  CLI::Option* opt_ordered =
      verify->add_option("--ordered-separation", verify_request.ordered_separation,
                         "losing coalition as comma-separated voters");
  opt_certificate->excludes(opt_equals)->excludes(opt_ordered);
  opt_equals->excludes(opt_ordered);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  CommandResult result;
  try {
    if (*analyze) {
      result = cmd_analyze(analyze_file);
    } else if (*dimension) {
      dimension_request.threads = threads;
      result = cmd_dimension(dimension_file, dimension_request);
    } else if (*construct) {
      result = cmd_construct(construct_request);
    } else {
      result = cmd_verify(verify_file, verify_request);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  std::cout << (json_out ? result.payload : result.human_text);
  return static_cast<int>(result.status);
}

}  // namespace votedim
