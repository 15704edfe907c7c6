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

#include "gasket/qsqrt3.hpp"

#include <cmath>

namespace gasket {

std::optional<Rational> QSqrt3::as_rational() const {
  if (v_ != 0) return std::nullopt;
  return u_;
}

int QSqrt3::sign() const {
  const int su = sgn(u_);
  const int sv = sgn(v_);
  if (sv == 0) return su;
  if (su == 0 || su == sv) return sv;
  // u and v of opposite signs: compare u^2 with 3 v^2
  const int c = sgn(Rational(u_ * u_ - 3 * v_ * v_));
  return c == 0 ? 0 : c * su;
}

double QSqrt3::to_double() const { return u_.get_d() + v_.get_d() * std::sqrt(3.0); }

std::string QSqrt3::str() const {
  if (v_ == 0) return to_fraction_string(u_);
  std::string out;
  if (u_ != 0) out = to_fraction_string(u_);
  if (v_ < 0) {
    out += "-" + to_fraction_string(Rational(-v_));
  } else {
    out += (u_ != 0 ? "+" : "") + to_fraction_string(v_);
  }
  return out + "√3";
}

}  // namespace gasket
