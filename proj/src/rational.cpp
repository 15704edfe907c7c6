// Copyright 2026 The Gasket Authors
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

#include "gasket/rational.hpp"

#include <cctype>

namespace gasket {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  const std::string num_s(num[0] == '+' ? num.substr(1) : num);
  mpz_class n(num_s, 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_fraction_string(const Rational& raw) {
  Rational value(raw);
  value.canonicalize();
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_decimal_string(const Rational& value, int places) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
  const bool negative = sgn(value) < 0;
  const Rational magnitude = negative ? Rational(-value) : value;
  // round(|v| * 10^places) = floor(|v| * 10^places + 1/2)
  const Rational scaled = magnitude * Rational(scale) + Rational(1, 2);
  mpz_class digits = scaled.get_num() / scaled.get_den();

  std::string body = digits.get_str();
  if (places > 0) {
    if (body.size() <= static_cast<std::size_t>(places)) {
      body.insert(0, static_cast<std::size_t>(places) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(places), ".");
  }
  if (negative && digits != 0) body.insert(0, "-");
  return body;
}

Rational pow2(long exponent) {
  mpz_class p;
  const unsigned long e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
  mpz_ui_pow_ui(p.get_mpz_t(), 2, e);
  return exponent < 0 ? Rational(mpz_class(1), p) : Rational(p);
}

}  // namespace gasket
