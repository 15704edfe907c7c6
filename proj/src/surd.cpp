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

#include "gasket/surd.hpp"

#include <cmath>
#include <stdexcept>

namespace gasket {

namespace {

std::optional<Rational> exact_sqrt(const Rational& r) {
  if (sgn(r) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(r.get_num().get_mpz_t()) || !mpz_perfect_square_p(r.get_den().get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), r.get_num().get_mpz_t());
  mpz_sqrt(d.get_mpz_t(), r.get_den().get_mpz_t());
  return Rational(n, d);
}

// Bounds lo <= sqrt(r) <= hi with hi - lo = 1 / (den * 2^bits).
void sqrt_bounds(const Rational& r, unsigned long bits, Rational& lo, Rational& hi) {
  mpz_class scaled = r.get_num() * r.get_den();
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2 * bits);
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  mpz_class denom = r.get_den();
  mpz_mul_2exp(denom.get_mpz_t(), denom.get_mpz_t(), bits);
  lo = Rational(root, denom);
  hi = Rational(root + 1, denom);
  lo.canonicalize();
  hi.canonicalize();
}

}  // namespace

Surd::Surd(const Rational& value) { add_term(Rational(1), value); }

Surd Surd::sqrt(const Rational& radicand) {
  if (sgn(radicand) < 0) throw std::domain_error("Surd::sqrt of a negative number");
  Surd s;
  s.add_term(radicand, Rational(1));
  return s;
}

void Surd::add_term(const Rational& radicand, const Rational& coeff) {
  if (sgn(coeff) == 0 || sgn(radicand) == 0) return;
  if (auto root = exact_sqrt(radicand)) {
    if (*root != 1) {
      add_term(Rational(1), Rational(coeff * *root));
      return;
    }
  }
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    // sqrt(r') = sqrt(r*r') / r * sqrt(r) whenever r*r' is a rational square
    if (auto root = exact_sqrt(Rational(it->radicand * radicand))) {
      it->coeff += coeff * *root / it->radicand;
      if (sgn(it->coeff) == 0) terms_.erase(it);
      return;
    }
  }
  terms_.push_back({radicand, coeff});
}

Surd Surd::operator-() const {
  Surd out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Surd& Surd::operator+=(const Surd& rhs) {
  for (const auto& t : rhs.terms_) add_term(t.radicand, t.coeff);
  return *this;
}

Surd& Surd::operator*=(const Rational& k) {
  if (sgn(k) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= k;
  return *this;
}

Surd operator*(const Surd& lhs, const Surd& rhs) {
  Surd out;
  for (const auto& a : lhs.terms_) {
    for (const auto& b : rhs.terms_) out.add_term(Rational(a.radicand * b.radicand), Rational(a.coeff * b.coeff));
  }
  return out;
}

int Surd::sign() const {
  if (terms_.empty()) return 0;
  if (terms_.size() == 1) return sgn(terms_.front().coeff);
  for (unsigned long bits = 32;; bits *= 2) {
    Rational lo_sum(0), hi_sum(0), lo, hi;
    for (const auto& t : terms_) {
      sqrt_bounds(t.radicand, bits, lo, hi);
      if (sgn(t.coeff) > 0) {
        lo_sum += t.coeff * lo;
        hi_sum += t.coeff * hi;
      } else {
        lo_sum += t.coeff * hi;
        hi_sum += t.coeff * lo;
      }
    }
    if (sgn(lo_sum) > 0) return 1;
    if (sgn(hi_sum) < 0) return -1;
  }
}

std::strong_ordering operator<=>(const Surd& lhs, const Surd& rhs) {
  const int s = (lhs - rhs).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::optional<Rational> Surd::as_rational() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.front().radicand == 1) return terms_.front().coeff;
  return std::nullopt;
}

double Surd::to_double() const {
  double sum = 0.0;
  for (const auto& t : terms_) sum += t.coeff.get_d() * std::sqrt(t.radicand.get_d());
  return sum;
}

std::string Surd::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    std::string piece = to_fraction_string(t.coeff);
    if (t.radicand != 1) piece += "*sqrt(" + to_fraction_string(t.radicand) + ")";
    if (!out.empty() && piece.front() != '-') out += "+";
    out += piece;
  }
  return out;
}

}  // namespace gasket
