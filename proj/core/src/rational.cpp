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

#include "votedim/rational.hpp"

#include <cstddef>

#include "votedim/errors.hpp"

namespace votedim {

namespace {

// An integer literal: optional '-', then digits without a leading zero
// (except "0" itself).
bool is_canonical_integer(const std::string& s, bool allow_negative) {
  std::size_t i = 0;
  if (allow_negative && i < s.size() && s[i] == '-') ++i;
  if (i >= s.size()) return false;
  if (s[i] == '0') return i + 1 == s.size() && i == 0;  // "0" yes, "-0" no
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_canonical_integer(text, /*allow_negative=*/true)) {
      throw ParseError("not a canonical integer: \"" + text + "\"");
    }
    return Rational(Integer(text, 10));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!is_canonical_integer(num, /*allow_negative=*/true) ||
      !is_canonical_integer(den, /*allow_negative=*/false)) {
    throw ParseError("not a canonical rational: \"" + text + "\"");
  }
  Integer p(num, 10);
  Integer q(den, 10);
  if (q == 0) throw ParseError("zero denominator: \"" + text + "\"");
  if (q == 1) throw ParseError("denominator 1 must be written as an integer: \"" + text + "\"");
  Integer g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  if (g != 1) throw ParseError("rational not in lowest terms: \"" + text + "\"");
  Rational r;
  r.get_num() = p;
  r.get_den() = q;
  return r;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::vector<Integer> clear_denominators(const std::vector<Rational>& values) {
  Integer lcm = 1;
  for (const auto& v : values) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
  }
  std::vector<Integer> out;
  out.reserve(values.size());
  for (const auto& v : values) {
    out.push_back(Integer(v.get_num() * (lcm / v.get_den())));
  }
  return out;
}

}  // namespace votedim
