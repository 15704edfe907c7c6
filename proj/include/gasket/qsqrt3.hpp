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

#include "gasket/rational.hpp"

namespace gasket {

/// u + v*sqrt(3) with rational u, v. The representation is unique and the
/// sign is decided exactly, so == and <=> are exact.
class QSqrt3 {
 public:
  QSqrt3() = default;
  QSqrt3(const Rational& u, const Rational& v = 0) : u_(u), v_(v) {  // NOLINT(google-explicit-constructor)
    u_.canonicalize();
    v_.canonicalize();
  }
  QSqrt3(long u) : QSqrt3(Rational(u)) {}  // NOLINT(google-explicit-constructor)

  static QSqrt3 sqrt3() { return {0, 1}; }

  const Rational& u() const { return u_; }
  const Rational& v() const { return v_; }
  std::optional<Rational> as_rational() const;

  QSqrt3 operator-() const { return {-u_, -v_}; }
  friend QSqrt3 operator+(const QSqrt3& a, const QSqrt3& b) { return {a.u_ + b.u_, a.v_ + b.v_}; }
  friend QSqrt3 operator-(const QSqrt3& a, const QSqrt3& b) { return {a.u_ - b.u_, a.v_ - b.v_}; }
  friend QSqrt3 operator*(const QSqrt3& a, const QSqrt3& b) {
    return {a.u_ * b.u_ + 3 * a.v_ * b.v_, a.u_ * b.v_ + a.v_ * b.u_};
  }

  int sign() const;
  double to_double() const;
  /// "p/q+r/s√3"; zero parts are omitted, "0" for zero.
  std::string str() const;

  friend bool operator==(const QSqrt3& a, const QSqrt3& b) { return a.u_ == b.u_ && a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const QSqrt3& a, const QSqrt3& b) {
    const int s = (a - b).sign();
    return s < 0 ? std::strong_ordering::less : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

 private:
  Rational u_ = 0;
  Rational v_ = 0;
};

inline QSqrt3 half(const QSqrt3& value) { return {value.u() / 2, value.v() / 2}; }
inline double to_double(const QSqrt3& value) { return value.to_double(); }

}  // namespace gasket
