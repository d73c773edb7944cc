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

// End-to-end acceptance checks. Each criterion prints one PASS/FAIL line
// together with its wall time; the process exit status is the number of
// failed criteria. Optional arguments select criteria by number.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "votedim/codes.hpp"
#include "votedim/constructions.hpp"
#include "votedim/dimension.hpp"
#include "votedim/separation.hpp"
#include "votedim/structure.hpp"
#include "votedim/trading.hpp"
#include "votedim/vector_game.hpp"

#include "helpers.hpp"

namespace {

using namespace votedim;
using votedim_tests::coal;
using votedim_tests::game_union;
using votedim_tests::intersection;
using votedim_tests::wg;

struct Checker {
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

int count_leaves(const Game& g) {
  if (!g.is_combination()) return 1;
  int total = 0;
  for (const Game& part : g.as_combination().parts) total += count_leaves(part);
  return total;
}

std::vector<std::uint64_t> minimal_masks(int n, const std::vector<char>& value) {
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 1; m <= full; ++m) {
    if (!value[m]) continue;
    bool minimal = true;
    for (int b = 0; b < n && minimal; ++b) {
      if ((m >> b) & 1) minimal = !value[m ^ (std::uint64_t{1} << b)];
    }
    if (minimal) out.push_back(m);
  }
  return out;
}

/// Every monotone game on n voters (empty coalition losing, grand coalition
/// winning), each given by its minimal winning masks. Masks are assigned in
/// descending popcount order, so a mask may win only when all its immediate
/// supersets already do.
std::vector<std::vector<std::uint64_t>> all_monotone_games(int n) {
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::vector<std::uint64_t> masks(full + 1);
  for (std::uint64_t m = 0; m <= full; ++m) masks[m] = m;
  std::sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
    const int pa = __builtin_popcountll(a);
    const int pb = __builtin_popcountll(b);
    if (pa != pb) return pa > pb;
    return a < b;
  });

  std::vector<char> value(full + 1, 0);
  std::vector<std::vector<std::uint64_t>> games;
  std::function<void(std::size_t)> walk = [&](std::size_t pos) {
    if (pos == masks.size()) {
      games.push_back(minimal_masks(n, value));
      return;
    }
    const std::uint64_t m = masks[pos];
    if (m == full) {
      value[m] = 1;
      walk(pos + 1);
      return;
    }
    if (m == 0) {
      value[m] = 0;
      walk(pos + 1);
      return;
    }
    value[m] = 0;
    walk(pos + 1);
    bool can_win = true;
    for (int b = 0; b < n && can_win; ++b) {
      if (!((m >> b) & 1)) can_win = value[m | (std::uint64_t{1} << b)] != 0;
    }
    if (can_win) {
      value[m] = 1;
      walk(pos + 1);
    }
  };
  walk(0);
  return games;
}

std::vector<std::uint64_t> random_minimal(std::mt19937& rng, int n) {
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::uniform_int_distribution<std::uint64_t> dist(1, full);
  std::vector<char> value(full + 1, 0);
  value[full] = 1;
  const int seeds = 1 + static_cast<int>(rng() % 5);
  for (int s = 0; s < seeds; ++s) value[dist(rng)] = 1;
  for (std::uint64_t m = 1; m <= full; ++m) {
    if (value[m]) continue;
    for (int b = 0; b < n; ++b) {
      if (((m >> b) & 1) && value[m ^ (std::uint64_t{1} << b)]) {
        value[m] = 1;
        break;
      }
    }
  }
  return minimal_masks(n, value);
}

Game explicit_from_masks(int n, const std::vector<std::uint64_t>& minimal) {
  ExplicitGame eg;
  eg.n = n;
  eg.min_winning.reserve(minimal.size());
  for (std::uint64_t m : minimal) eg.min_winning.push_back(Coalition::from_mask(n, m));
  return Game(eg);
}

void criterion1(Checker& c) {
  const Game g = example_game("1");
  c.require(validate(g).empty(), "catalog game 1 fails validation");
  c.require(!is_weighted(g).has_value(), "catalog game 1 should not be weighted");

  DimensionOptions opt;
  opt.threads = 2;
  const DimensionReport dim = dimension_exact(g, opt);
  c.require(dim.exact == 2, "dimension of game 1 is not 2");
  c.require(dim.witness_representation.has_value() &&
                games_equal(intersection(*dim.witness_representation), g),
            "dimension witness does not rebuild game 1");

  const DimensionReport codim = codimension_exact(g, opt);
  c.require(codim.exact == 2, "codimension of game 1 is not 2");
  c.require(codim.witness_representation.has_value() &&
                games_equal(game_union(*codim.witness_representation), g),
            "codimension witness does not rebuild game 1");

  const CertificateSearch search = find_certificate(g, 2);
  c.require(search.status == CertificateStatus::Found && search.certificate.has_value(),
            "no trading certificate found for game 1");
  if (search.certificate) {
    c.require(verify_trading_transform(g, *search.certificate) ==
                  TransformVerdict::ValidCertificate,
              "searched certificate for game 1 does not verify");
  }

  TradingTransform published;
  published.X = {coal(4, {1, 2}), coal(4, {3, 4})};
  published.Y = {coal(4, {1, 3}), coal(4, {2, 4})};
  c.require(verify_trading_transform(g, published) == TransformVerdict::ValidCertificate,
            "published certificate for game 1 does not verify");

  c.require(games_equal(intersection({wg(2, {1, 1, 2, 0}), wg(2, {1, 1, 0, 2})}), g),
            "two-game intersection form of game 1 fails");
  c.require(games_equal(game_union({wg(2, {1, 1, 0, 0}), wg(2, {0, 0, 1, 1})}), g),
            "two-game union form of game 1 fails");
}

void criterion2(Checker& c) {
  const Game g = example_game("2");
  c.require(validate(g).empty(), "catalog game 2 fails validation");

  const CompletenessResult comp = is_complete(g);
  c.require(comp.complete, "catalog game 2 should be complete");
  std::vector<int> sizes;
  sizes.reserve(comp.classes.size());
  for (const auto& cls : comp.classes) sizes.push_back(static_cast<int>(cls.size()));
  c.require(sizes == std::vector<int>({2, 4}), "class sizes of game 2 are not [2, 4]");

  const VectorGame vg = from_oracle(g);
  c.require(vg.class_sizes == std::vector<int>({2, 4}),
            "vector form of game 2 has wrong class sizes");

  std::set<TypeVector> types;
  for (const Coalition& s : minimal_winning(g)) types.insert(vg.type_of(s));
  const std::set<TypeVector> expected_types{{2, 0}, {1, 3}, {0, 4}};
  c.require(types == expected_types, "minimal winning types of game 2 are wrong");

  const ShiftExtremal ext = shift_extremal(vg);
  c.require(ext.shift_min_winning == std::vector<TypeVector>({{0, 4}, {2, 0}}),
            "shift-minimal winning vectors of game 2 are wrong");
  c.require(ext.shift_max_losing == std::vector<TypeVector>({{1, 2}}),
            "shift-maximal losing vectors of game 2 are wrong");

  DimensionOptions opt;
  opt.threads = 2;
  const DimensionReport dim = dimension_exact(g, opt);
  c.require(dim.exact == 2, "dimension of game 2 is not 2");
  c.require(dim.witness_representation.has_value() &&
                games_equal(intersection(*dim.witness_representation), g),
            "dimension witness does not rebuild game 2");

  const DimensionReport codim = codimension_exact(g, opt);
  c.require(codim.exact == 2, "codimension of game 2 is not 2");
  c.require(codim.witness_representation.has_value() &&
                games_equal(game_union(*codim.witness_representation), g),
            "codimension witness does not rebuild game 2");

  c.require(games_equal(intersection({wg(8, {5, 3, 2, 2, 2, 2}), wg(8, {3, 5, 2, 2, 2, 2})}), g),
            "two-game intersection form of game 2 fails");
  c.require(
      games_equal(game_union({wg(2, {1, 1, 0, 0, 0, 0}), wg(4, {1, 1, 1, 1, 1, 1})}), g),
      "two-game union form of game 2 fails");

  TradingTransform published;
  published.X = {coal(6, {1, 2}), coal(6, {3, 4, 5, 6})};
  published.Y = {coal(6, {1, 3, 4}), coal(6, {2, 5, 6})};
  c.require(verify_trading_transform(g, published) == TransformVerdict::ValidCertificate,
            "published certificate for game 2 does not verify");
}

void criterion3(Checker& c) {
  for (int d = 2; d <= 5; ++d) {
    const std::string tag = "d=" + std::to_string(d) + ": ";
    const FamilyBundle bundle = parametric_bundle(d, 2 * d);
    const Game g(bundle.game);
    c.require(validate(g).empty(), tag + "family game fails validation");
    c.require(bundle.claimed_lower_bound == d, tag + "claimed lower bound is not d");
    c.require(static_cast<int>(bundle.losing_family.size()) == d,
              tag + "losing family size is not d");
    for (const Coalition& t : bundle.losing_family) {
      c.require(!evaluate(g, t), tag + "a losing-family member wins");
    }

    c.require(static_cast<int>(bundle.certificates.size()) == d * (d - 1) / 2,
              tag + "certificate count is not d(d-1)/2");
    for (const TradingTransform& tt : bundle.certificates) {
      c.require(verify_trading_transform(g, tt) == TransformVerdict::ValidCertificate,
                tag + "a pair certificate does not verify");
    }
    for (std::size_t i = 0; i < bundle.losing_family.size(); ++i) {
      for (std::size_t j = i + 1; j < bundle.losing_family.size(); ++j) {
        c.require(
            !separate(g, {bundle.losing_family[i], bundle.losing_family[j]}).has_value(),
            tag + "a losing pair is co-rejectable");
      }
    }

    c.require(bundle.upper_witness.has_value() &&
                  static_cast<int>(bundle.upper_witness->size()) == d &&
                  games_equal(intersection(*bundle.upper_witness), g),
              tag + "upper witness does not rebuild the game");

    DimensionOptions opt;
    opt.threads = 4;
    const DimensionReport report = dimension_exact(g, opt);
    c.require(!report.budget_exceeded, tag + "dimension computation hit a budget");
    c.require(report.exact == d, tag + "exact dimension is not d");
    c.require(report.witness_representation.has_value() &&
                  static_cast<int>(report.witness_representation->size()) == d &&
                  games_equal(intersection(*report.witness_representation), g),
              tag + "dimension witness does not rebuild the game");
  }
}

void criterion4(Checker& c) {
  for (int k = 2; k <= 3; ++k) {
    const std::string tag = "k=" + std::to_string(k) + ": ";
    const ConstantWeightCode code = graham_sloane_code(2 * k, k);

    int recomputed = 2 * code.weight;
    for (std::size_t i = 0; i < code.codewords.size(); ++i) {
      for (std::size_t j = i + 1; j < code.codewords.size(); ++j) {
        int diff = 0;
        for (int pos = 0; pos < code.length; ++pos) {
          diff += code.codewords[i][pos] != code.codewords[j][pos] ? 1 : 0;
        }
        recomputed = std::min(recomputed, diff);
      }
    }
    c.require(recomputed == code.min_distance, tag + "stored code distance is wrong");
    c.require(code.min_distance >= 4, tag + "code distance is below 4");

    const long long total = binom(2 * k, k);
    const long long pigeonhole = (total + 2 * k - 1) / (2 * k);
    c.require(static_cast<long long>(code.codewords.size()) >= pigeonhole,
              tag + "code is smaller than the pigeonhole bound");

    const FamilyBundle bundle = code_family_bundle(k);
    const Game g(bundle.game);
    c.require(validate(g).empty(), tag + "family game fails validation");
    c.require(bundle.claimed_lower_bound == brute_force_A(2 * k, 4, k),
              tag + "claimed bound differs from the exhaustive code optimum");
    c.require(static_cast<int>(bundle.losing_family.size()) == bundle.claimed_lower_bound,
              tag + "losing family size differs from the claimed bound");
    for (const Coalition& t : bundle.losing_family) {
      c.require(!evaluate(g, t), tag + "a losing-family member wins");
    }
    const int d = bundle.claimed_lower_bound;
    c.require(static_cast<int>(bundle.certificates.size()) == d * (d - 1) / 2,
              tag + "certificate count is not d(d-1)/2");
    for (const TradingTransform& tt : bundle.certificates) {
      c.require(verify_trading_transform(g, tt) == TransformVerdict::ValidCertificate,
                tag + "a pair certificate does not verify");
    }
    for (std::size_t i = 0; i < bundle.losing_family.size(); ++i) {
      for (std::size_t j = i + 1; j < bundle.losing_family.size(); ++j) {
        c.require(
            !separate(g, {bundle.losing_family[i], bundle.losing_family[j]}).has_value(),
            tag + "a losing pair is co-rejectable");
      }
    }

    const Game formula = boolean_upper_construction(bundle.game);
    const BooleanBounds bounds = booldim_bounds(bundle.game);
    const int leaves = count_leaves(formula);
    c.require(leaves <= 4 && leaves <= bounds.product_bound,
              tag + "formula uses more than four threshold leaves");
    c.require(games_equal(formula, g), tag + "formula does not rebuild the game");
  }
}

void criterion5(Checker& c) {
  const VectorGame vg = staircase_game(20);
  c.require(vg.n() == 80, "staircase game does not have 80 voters");
  c.require(validate(Game(vg)).empty(), "staircase game fails validation");
  c.require(!is_winning_vector(vg, {4, 4, 4, 4}), "type (4,4,4,4) should lose");

  std::vector<int> members;
  for (int block = 0; block < 4; ++block) {
    for (int v = 1; v <= 4; ++v) members.push_back(20 * block + v);
  }
  const Coalition t = Coalition::from_members(80, members);
  c.require(vg.type_of(t) == TypeVector({4, 4, 4, 4}), "probe coalition has the wrong type");

  c.require(!ordered_separate(vg, t).has_value(),
            "order-respecting rejection should be infeasible");

  const auto witness = separate(Game(vg), {t});
  c.require(witness.has_value(), "unordered rejection should be feasible");
  if (witness) {
    c.require(witness->weight_of(t) < witness->quota, "witness fails to reject the coalition");
    c.require(witness->weight_of(Coalition::full(80)) >= witness->quota,
              "witness rejects the grand coalition");
    c.require(witness->weight_of(coal(80, {1, 2, 3, 4, 5})) >= witness->quota,
              "witness rejects a winning coalition");
  }
}

void check_small_game(Checker& c, const Game& g, const std::string& tag) {
  const auto weighted = is_weighted(g);
  const CertificateSearch search = find_certificate(g, 4);
  const bool found = search.status == CertificateStatus::Found;
  c.require(weighted.has_value() != found, tag + "weightedness and certificate search disagree");
  if (weighted) {
    c.require(games_equal(Game(*weighted), g), tag + "weighted witness differs from the game");
  }
  if (found) {
    c.require(search.certificate.has_value() &&
                  verify_trading_transform(g, *search.certificate) ==
                      TransformVerdict::ValidCertificate,
              tag + "searched certificate does not verify");
  }
  const DesirabilityReport des = desirability(g);
  for (int cls = 1; cls <= static_cast<int>(des.classes.size()); ++cls) {
    const std::vector<WeightedGame> rep = unit_class_representation(g, cls);
    c.require(games_equal(intersection(rep), g),
              tag + "unit-class representation on class " + std::to_string(cls) + " differs");
  }
}

void criterion6(Checker& c) {
  const std::vector<int> expected_counts{1, 4, 18, 166, 7579};
  long long id = 0;
  for (int n = 1; n <= 5; ++n) {
    const auto games = all_monotone_games(n);
    c.require(static_cast<int>(games.size()) == expected_counts[static_cast<std::size_t>(n - 1)],
              "monotone game count for n=" + std::to_string(n) + " is off");
    for (const auto& minimal : games) {
      if (c.failures.size() >= 20) return;
      ++id;
      check_small_game(c, explicit_from_masks(n, minimal),
                       "exhaustive game #" + std::to_string(id) + ": ");
    }
  }
  std::mt19937 rng(20260815u);
  for (int i = 0; i < 500; ++i) {
    if (c.failures.size() >= 20) return;
    check_small_game(c, explicit_from_masks(6, random_minimal(rng, 6)),
                     "random game #" + std::to_string(i) + ": ");
  }
}

void criterion7(Checker& c) {
  std::vector<std::pair<std::string, Game>> corpus;
  corpus.emplace_back("catalog 1", example_game("1"));
  corpus.emplace_back("catalog 2", example_game("2"));
  corpus.emplace_back("catalog lisbon-shape", example_game("lisbon-shape"));
  corpus.emplace_back("weighted [3;2,1,1]", Game(wg(3, {2, 1, 1})));
  for (int d = 2; d <= 4; ++d) {
    corpus.emplace_back("two-class family d=" + std::to_string(d),
                        Game(parametric_bundle(d, 2 * d).game));
  }
  for (int k = 2; k <= 3; ++k) {
    corpus.emplace_back("code family k=" + std::to_string(k), Game(code_family_bundle(k).game));
  }
  {
    const std::vector<VectorGame> census = enumerate_t2(7);
    for (std::size_t i = 0; i < census.size(); i += 5) {
      corpus.emplace_back("two-class n=7 #" + std::to_string(i), Game(census[i]));
    }
  }
  std::mt19937 rng(977u);
  for (int i = 0; i < 50; ++i) {
    corpus.emplace_back("random n=6 #" + std::to_string(i),
                        explicit_from_masks(6, random_minimal(rng, 6)));
  }

  for (const auto& [name, g] : corpus) {
    if (c.failures.size() >= 20) return;
    const std::string tag = name + ": ";
    DimensionOptions opt;
    opt.budget_seconds = 90.0;
    opt.threads = 4;
    const DimensionReport r = dimension_exact(g, opt);
    c.require(r.upper_unit_class >= 1 && r.upper_maxlosing >= r.upper_unit_class,
              tag + "upper bounds are missing or out of order");
    if (r.budget_exceeded) continue;
    c.require(r.lower_clique >= 1, tag + "clique bound is below 1");
    c.require(r.lower_clique <= r.upper_unit_class,
              tag + "clique bound exceeds the unit-class bound");
    if (r.exact) {
      c.require(r.lower_clique <= *r.exact, tag + "exact value is below the clique bound");
      c.require(*r.exact <= std::min(r.upper_maxlosing, r.upper_unit_class),
                tag + "exact value is above an upper bound");
      const bool witness_ok = r.witness_representation.has_value() &&
                              static_cast<int>(r.witness_representation->size()) == *r.exact;
      c.require(witness_ok, tag + "witness size differs from the exact value");
      if (witness_ok) {
        c.require(games_equal(intersection(*r.witness_representation), g),
                  tag + "witness does not rebuild the game");
      }
    }
  }
}

void criterion8(Checker& c) {
  for (int n = 2; n <= 10; ++n) {
    const std::vector<VectorGame> census = enumerate_t2(n);
    c.require(census.size() == count_formula_t2(n),
              "census size differs from the closed form at n=" + std::to_string(n));
    if (n <= 6) {
      for (const VectorGame& vg : census) {
        c.require(validate(Game(vg)).empty(),
                  "a census game fails validation at n=" + std::to_string(n));
      }
    }
  }
}

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  void (*run)(Checker&);
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "four-voter reference game: dimension, certificates, representations", 1.0,
       criterion1},
      {2, "two-class reference game: structure, dimension, representations", 1.0, criterion2},
      {3, "parametric two-class family reaches each target dimension", 300.0, criterion3},
      {4, "code-based family: distance, clique bound, formula bound", 120.0, criterion4},
      {5, "eighty-voter staircase: ordered rejection infeasible, unordered feasible", 300.0,
       criterion5},
      {6, "small games: weighted or certified unweighted, representations rebuild", 600.0,
       criterion6},
      {7, "dimension bounds bracket the exact value across the corpus", 600.0, criterion7},
      {8, "two-class census matches the closed form", 120.0, criterion8},
  };

  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));

  int failed = 0;
  int ran = 0;
  for (const Criterion& cr : criteria) {
    if (!wanted.empty() && wanted.count(cr.id) == 0) continue;
    ++ran;
    Checker checker;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.run(checker);
    } catch (const std::exception& e) {
      checker.failures.push_back(std::string("unhandled exception: ") + e.what());
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > cr.budget_seconds) {
      char line[96];
      std::snprintf(line, sizeof(line), "time budget exceeded: %.2fs > %.0fs", elapsed,
                    cr.budget_seconds);
      checker.failures.push_back(line);
    }
    if (checker.failures.empty()) {
      std::printf("criterion %d: PASS (%.2fs) %s\n", cr.id, elapsed, cr.title);
    } else {
      ++failed;
      std::printf("criterion %d: FAIL (%.2fs) %s\n", cr.id, elapsed, cr.title);
      std::size_t shown = 0;
      for (const std::string& f : checker.failures) {
        if (shown == 10) {
          std::printf("  ... and %zu more\n", checker.failures.size() - shown);
          break;
        }
        std::printf("  - %s\n", f.c_str());
        ++shown;
      }
    }
    std::fflush(stdout);
  }
  std::printf("%d of %d criteria passed\n", ran - failed, ran);
  return failed;
}
