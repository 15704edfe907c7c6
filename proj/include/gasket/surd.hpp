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

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "gasket/rational.hpp"

namespace gasket {

/// Exact real number of the form q0 + q1*sqrt(r1) + ... + qk*sqrt(rk) with
/// rational q_i and positive rational r_i.
///
/// Radicands are kept pairwise independent over Q (r_i*r_j is never a
/// rational square), so the representation is zero iff it has no terms.
/// Signs are decided by interval refinement, which always terminates on a
/// nonzero value. Euclidean distances between finitely addressed gasket
/// points and between points of the Delta example are all square roots of
/// rationals, so this is the metric scalar for those spaces.
class Surd {
 public:
  Surd() = default;
  Surd(const Rational& value);  // NOLINT(google-explicit-constructor)
  Surd(long value) : Surd(Rational(value)) {}  // NOLINT(google-explicit-constructor)

  /// sqrt(radicand); throws std::domain_error for a negative radicand.
  static Surd sqrt(const Rational& radicand);

  Surd operator-() const;
  Surd& operator+=(const Surd& rhs);
  Surd& operator-=(const Surd& rhs) { return *this += -rhs; }
  Surd& operator*=(const Rational& k);
  friend Surd operator+(Surd lhs, const Surd& rhs) { return lhs += rhs; }
  friend Surd operator-(Surd lhs, const Surd& rhs) { return lhs -= rhs; }
  friend Surd operator*(Surd lhs, const Rational& k) { return lhs *= k; }
  friend Surd operator*(const Rational& k, Surd rhs) { return rhs *= k; }
  friend Surd operator*(const Surd& lhs, const Surd& rhs);

  int sign() const;
  bool is_zero() const { return terms_.empty(); }
  std::optional<Rational> as_rational() const;
  double to_double() const;
  std::string str() const;

  friend bool operator==(const Surd& lhs, const Surd& rhs) { return (lhs - rhs).is_zero(); }
  friend std::strong_ordering operator<=>(const Surd& lhs, const Surd& rhs);

 private:
  struct Term {
    Rational radicand;  // 1 for the rational part
    Rational coeff;
  };
  void add_term(const Rational& radicand, const Rational& coeff);

  std::vector<Term> terms_;
};

inline Surd half(const Surd& value) { return value * Rational(1, 2); }

inline double to_double(const Surd& value) { return value.to_double(); }

}  // namespace gasket
