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

#include <gmpxx.h>

#include <string>
#include <vector>

namespace votedim {

// All quotas and weights in the library are exact rationals with
// arbitrary-precision integer parts. GMP supplies the arithmetic; the helpers
// here pin down the one textual format we accept and emit.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p" or "p/q" with an optional leading minus sign.
///
/// The input must already be in lowest terms with a positive denominator:
/// "2/4", "1/-2", "03" or "1/1" are rejected. This keeps serialized games
/// canonical, so byte-wise file comparison implies semantic equality.
Rational parse_rational(const std::string& text);

/// Renders canonically: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& value);

/// Multiplies all values by the least common denominator, returning integers
/// in the same order. Used to turn a rational weight vector into an
/// equivalent integer one.
std::vector<Integer> clear_denominators(const std::vector<Rational>& values);

}  // namespace votedim
