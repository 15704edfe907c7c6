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

#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace gasket {

/// Exact rational number. All metric values in this library are Rationals.
using Rational = mpq_class;

/// Raised when a computation would exceed a documented size guard
/// (oracle level, render depth, report length).
class ResourceGuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_fraction_string(const Rational& value);

/// Decimal expansion rounded half away from zero to `places` digits.
/// Computed exactly, so identical values always print identically.
std::string to_decimal_string(const Rational& value, int places = 12);

/// 2^exponent for any integer exponent.
Rational pow2(long exponent);

inline Rational half(const Rational& value) { return Rational(value / 2); }

inline double to_double(const Rational& value) { return value.get_d(); }

}  // namespace gasket
