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

#include "pacing/rational.h"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>

namespace pacing {
namespace {

bool AllDigits(std::string_view text) {
  return !text.empty() && std::all_of(text.begin(), text.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });
}

bool IsIntegerLiteral(std::string_view text) {
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    text.remove_prefix(1);
  }
  return AllDigits(text);
}

mpz_class ParseInteger(std::string_view text) {
  if (!IsIntegerLiteral(text)) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  if (text.front() == '+') text.remove_prefix(1);
  return mpz_class(std::string(text), 10);
}

}  // namespace

Rational MakeRational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational value(num, den);
  value.canonicalize();
  return value;
}

Rational ParseRational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(ParseInteger(text));
  const mpz_class num = ParseInteger(text.substr(0, slash));
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw std::invalid_argument("signed denominator: '" + std::string(text) +
                                "'");
  }
  const mpz_class den = ParseInteger(den_text);
  if (den == 0) {
    throw std::invalid_argument("zero denominator: '" + std::string(text) +
                                "'");
  }
  Rational value(num, den);
  value.canonicalize();
  return value;
}

Rational ParseRationalOrDecimal(std::string_view text) {
  const auto dot = text.find('.');
  if (dot == std::string_view::npos) return ParseRational(text);
  std::string_view int_part = text.substr(0, dot);
  const std::string_view frac_part = text.substr(dot + 1);
  bool negative = false;
  if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
    negative = int_part.front() == '-';
    int_part.remove_prefix(1);
  }
  const bool int_ok = int_part.empty() || AllDigits(int_part);
  if (!int_ok || !AllDigits(frac_part)) {
    throw std::invalid_argument("not a decimal: '" + std::string(text) + "'");
  }
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_part.size());
  const mpz_class whole =
      int_part.empty() ? mpz_class(0) : mpz_class(std::string(int_part), 10);
  Rational value(whole * scale + mpz_class(std::string(frac_part), 10), scale);
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

std::string FormatRational(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace pacing
