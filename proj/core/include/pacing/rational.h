// Copyright 2026 The Pacing Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PACING_RATIONAL_H_
#define PACING_RATIONAL_H_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace pacing {

// Arbitrary-precision rational, always kept in lowest terms with a positive
// denominator. Every numeric quantity in the library is a Rational.
using Rational = mpq_class;

// Builds num/den in canonical form. Throws std::invalid_argument if den == 0.
Rational MakeRational(long num, long den = 1);

// Parses "p/q" or a bare integer "p". Throws std::invalid_argument on
// malformed input or a zero denominator.
Rational ParseRational(std::string_view text);

// Like ParseRational, but also accepts finite decimals ("1.8", "-0.05",
// "13.5"), converted exactly (1.8 -> 9/5).
Rational ParseRationalOrDecimal(std::string_view text);

// Canonical "p/q" text; integers keep an explicit "/1".
std::string FormatRational(const Rational& value);

}  // namespace pacing

#endif  // PACING_RATIONAL_H_
