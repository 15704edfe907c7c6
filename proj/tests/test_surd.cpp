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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "gasket/surd.hpp"

namespace gasket {
namespace {

TEST(Surd, PerfectSquaresCollapseToRationals) {
  EXPECT_EQ(Surd::sqrt(Rational(9, 4)).as_rational(), Rational(3, 2));
  EXPECT_EQ(Surd::sqrt(Rational(0)).as_rational(), Rational(0));
  EXPECT_FALSE(Surd::sqrt(Rational(2)).as_rational().has_value());
}

TEST(Surd, DependentRadicalsMerge) {
  // sqrt(8) = 2 sqrt(2), sqrt(1/2) = sqrt(2)/2
  const Surd s = Surd::sqrt(Rational(8)) - Rational(2) * Surd::sqrt(Rational(2));
  EXPECT_TRUE(s.is_zero());
  const Surd t = Surd::sqrt(Rational(1, 2)) * Rational(2) - Surd::sqrt(Rational(2));
  EXPECT_TRUE(t.is_zero());
  EXPECT_EQ(Surd::sqrt(Rational(3)) * Surd::sqrt(Rational(12)), Surd(Rational(6)));
}

TEST(Surd, SignsOfNearCancellations) {
  // sqrt(2) + sqrt(3) vs sqrt(10): 5 + 2 sqrt(6) < 10
  EXPECT_LT(Surd::sqrt(Rational(2)) + Surd::sqrt(Rational(3)), Surd::sqrt(Rational(10)));
  // 1 + sqrt(3)/2 vs sqrt(3): 1 > sqrt(3)/2
  EXPECT_LT(Surd::sqrt(Rational(3)), Surd(1) + half(Surd::sqrt(Rational(3))));
  // 1e-12 separated values
  const Surd a = Surd::sqrt(Rational(2));
  const Surd b = Surd(Rational("14142135623731/10000000000000"));
  EXPECT_LT(a, b);
}

TEST(Surd, NegativeRadicandThrows) { EXPECT_THROW(Surd::sqrt(Rational(-1)), std::domain_error); }

TEST(Surd, OrderAgreesWithDoublesOnRandomSums) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> small(1, 40);
  std::uniform_int_distribution<int> coeff(-9, 9);
  for (int trial = 0; trial < 500; ++trial) {
    Surd x, y;
    for (int k = 0; k < 3; ++k) {
      x += Rational(coeff(rng), small(rng)) * Surd::sqrt(Rational(small(rng)));
      y += Rational(coeff(rng), small(rng)) * Surd::sqrt(Rational(small(rng)));
    }
    const double gap = x.to_double() - y.to_double();
    if (std::abs(gap) < 1e-9) continue;
    EXPECT_EQ(x < y, gap < 0) << x.str() << " vs " << y.str();
  }
}

}  // namespace
}  // namespace gasket
