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
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "gasket/geometry.hpp"
#include "gasket/metric.hpp"
#include "support/generators.hpp"

namespace gasket {
namespace {

AddressWord W(const char* text) { return AddressWord::parse(text); }
Point2 P(const Rational& x, const Rational& ycoeff) { return {QSqrt3(x), QSqrt3(0, ycoeff)}; }

TEST(QSqrt3, SignIsExact) {
  EXPECT_EQ(QSqrt3(0).sign(), 0);
  EXPECT_EQ(QSqrt3(2, -1).sign(), 1);   // 2 > sqrt3
  EXPECT_EQ(QSqrt3(-2, 1).sign(), -1);
  EXPECT_EQ(QSqrt3(-1, 1).sign(), 1);   // sqrt3 > 1
  EXPECT_EQ(QSqrt3(Rational(97, 56), -1).sign(), 1);
  EXPECT_EQ(QSqrt3(Rational(1351, 780), -1).sign(), 1);  // convergent just above sqrt3
  EXPECT_EQ(QSqrt3(Rational(265, 153), -1).sign(), -1);  // convergent just below
}

TEST(QSqrt3, ArithmeticAndFormat) {
  const QSqrt3 r3 = QSqrt3::sqrt3();
  EXPECT_EQ(r3 * r3, QSqrt3(3));
  EXPECT_EQ(half(QSqrt3(1, 1)), QSqrt3(Rational(1, 2), Rational(1, 2)));
  EXPECT_EQ((QSqrt3(1, 2) - QSqrt3(1, 2)).sign(), 0);
  EXPECT_EQ(QSqrt3(Rational(3, 8)).str(), "3/8");
  EXPECT_EQ(QSqrt3(0, Rational(1, 8)).str(), "1/8√3");
  EXPECT_EQ(QSqrt3(Rational(1, 2), Rational(-1, 4)).str(), "1/2-1/4√3");
  EXPECT_EQ(QSqrt3(Rational(1, 2), Rational(1, 4)).str(), "1/2+1/4√3");
  EXPECT_EQ(QSqrt3(Rational(2, 4)), QSqrt3(Rational(1, 2)));
}

TEST(QSqrt3, OrderAgreesWithDoubles) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 2000; ++k) {
    const QSqrt3 a(test::random_unit_rational(rng) - Rational(1, 2), test::random_unit_rational(rng) - Rational(1, 2));
    const QSqrt3 b(test::random_unit_rational(rng) - Rational(1, 2), test::random_unit_rational(rng) - Rational(1, 2));
    const double da = a.to_double(), db = b.to_double();
    if (std::abs(da - db) > 1e-12) EXPECT_EQ(a < b, da < db);
  }
}

TEST(Sigma, FixedPointsAndImages) {
  EXPECT_EQ(sigma(Label::b, P(0, 0)), P(0, 0));
  EXPECT_EQ(sigma(Label::a, P(Rational(1, 2), Rational(1, 2))), P(Rational(1, 2), Rational(1, 2)));
  EXPECT_EQ(sigma(Label::c, P(1, 0)), P(1, 0));
  EXPECT_EQ(sigma(Label::a, P(1, 0)), P(Rational(3, 4), Rational(1, 4)));
  for (Label m : kLabels) EXPECT_EQ(sigma_preimage(m, sigma(m, P(Rational(1, 3), Rational(1, 7)))), P(Rational(1, 3), Rational(1, 7)));
}

TEST(Coords, Examples) {
  EXPECT_EQ(coords(W(".L")), P(0, 0));
  EXPECT_EQ(coords(W("ba.R")), P(Rational(3, 8), Rational(1, 8)));
  EXPECT_EQ(coords(W("b.T")), P(Rational(1, 4), Rational(1, 4)));
  EXPECT_EQ(coords(W("a.L")), P(Rational(1, 4), Rational(1, 4)));
}

TEST(Coords, InvariantUnderGluingAndPadding) {
  for (std::size_t n = 0; n <= 6; ++n) {
    for (const auto& w : all_words(n)) {
      const Point2 p = coords(w);
      EXPECT_TRUE(in_triangle(p));
      EXPECT_EQ(p, coords(canonicalize(w)));
      EXPECT_EQ(p, coords(embed(w, n + 2)));
      if (const auto partner = glue_partner(w)) EXPECT_EQ(p, coords(*partner)) << w;
    }
  }
}

TEST(SigmaInv, JunctionTieBreaks) {
  EXPECT_EQ(sigma_inv(P(0, 0)), std::make_pair(Label::b, P(0, 0)));
  EXPECT_EQ(sigma_inv(P(Rational(1, 4), Rational(1, 4))), std::make_pair(Label::a, P(0, 0)));
  EXPECT_EQ(sigma_inv(P(Rational(3, 4), Rational(1, 4))), std::make_pair(Label::a, P(1, 0)));
  EXPECT_EQ(sigma_inv(P(Rational(1, 2), 0)), std::make_pair(Label::b, P(1, 0)));
}

TEST(SigmaInv, DomainErrors) {
  EXPECT_THROW(sigma_inv(P(-1, 0)), std::domain_error);
  EXPECT_THROW(sigma_inv(P(Rational(1, 2), 1)), std::domain_error);
  EXPECT_THROW(sigma_inv(P(Rational(1, 2), Rational(1, 8))), std::domain_error);  // inside the removed triangle
  EXPECT_THROW(sigma_inv({QSqrt3(Rational(1, 2)), QSqrt3(Rational(-1, 100))}), std::domain_error);
}

TEST(SigmaInv, RoundTripsExactly) {
  for (std::size_t n = 0; n <= 6; ++n) {
    for (const auto& w : all_words(n)) {
      const Point2 p = coords(w);
      const auto [m, pre] = sigma_inv(p);
      EXPECT_EQ(sigma(m, pre), p) << w;
    }
  }
}

TEST(AddressOf, Examples) {
  EXPECT_EQ(address_of(P(0, 0), 0), W(".L"));
  EXPECT_EQ(address_of(P(0, 0), 9), W(".L"));
  EXPECT_EQ(address_of(P(Rational(3, 8), Rational(1, 8)), 2), W("ba.R"));
  EXPECT_EQ(address_of(P(Rational(1, 2), 0), 1), W("b.R"));
  EXPECT_THROW(address_of(P(Rational(1, 2), 0), 0), std::invalid_argument);
  EXPECT_EQ(address_of(P(Rational(1, 3), 0), 4), W("bcbc.R"));
}

TEST(AddressOf, InvertsCoordsOnCanonicalAddresses) {
  for (const auto& c : canonical_addresses(6)) {
    const Point2 p = coords(c);
    EXPECT_EQ(address_of(p, c.level()), c.word()) << c;
    EXPECT_EQ(coords(address_of(p, c.level())), p);
  }
}

TEST(Euclidean, ExactDistances) {
  EXPECT_EQ(euclidean(vertex(Terminal::T), vertex(Terminal::L)), Surd(1));
  EXPECT_EQ(euclidean(coords(W("ab.R")), coords(W("bc.T"))), Surd(Rational(1, 4)));
  const Point2 off_lattice{QSqrt3(1, 1), QSqrt3(0)};
  EXPECT_THROW(euclidean(off_lattice, P(0, 0)), std::domain_error);
}

TEST(GasketSpace, BuiltinsValidate) {
  EXPECT_NO_THROW(validate(gasket_space()));
  EXPECT_NO_THROW(validate(gasket_tau()));
  EXPECT_NO_THROW(validate(gasket_sigma()));
}

TEST(GasketSpace, EuclideanIsBelowTheAddressMetric) {
  std::mt19937_64 rng(8);
  double worst = 0;
  for (int k = 0; k < 1000; ++k) {
    const auto u = test::random_canonical(rng, 8);
    const auto v = test::random_canonical(rng, 8);
    const Surd e = euclidean(coords(u), coords(v));
    const Dist d = dist_G(u, v);
    EXPECT_LE(e, Surd(d)) << u << " " << v;
    if (!e.is_zero()) worst = std::max(worst, d.get_d() / e.to_double());
  }
  EXPECT_LE(worst, 2.0 + 1e-12);
  EXPECT_EQ(Surd(dist_G(canonicalize("ab.R"), canonicalize("bc.T"))),
            Rational(2) * euclidean(coords(W("ab.R")), coords(W("bc.T"))));
}

TEST(GasketSpace, CellDiameter) {
  std::mt19937_64 rng(10);
  for (int k = 0; k < 500; ++k) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(0, 8)(rng);
    const std::size_t t = std::uniform_int_distribution<std::size_t>(0, 6)(rng);
    const auto prefix = test::random_labels(rng, n);
    auto word = [&](const AddressWord& tail) {
      std::vector<Label> labels = prefix;
      labels.insert(labels.end(), tail.labels().begin(), tail.labels().end());
      return AddressWord(labels, tail.terminal());
    };
    const Point2 p = coords(word(test::random_word(rng, t)));
    const Point2 q = coords(word(test::random_word(rng, t)));
    EXPECT_LE(euclidean(p, q), Surd(pow2(-static_cast<long>(n))));
  }
}

class RenderTest : public ::testing::Test {
 protected:
  std::filesystem::path dir = std::filesystem::temp_directory_path() / "gasket_render_test";
  void SetUp() override { std::filesystem::create_directories(dir); }
  void TearDown() override { std::filesystem::remove_all(dir); }
};

TEST_F(RenderTest, CountsMatchTheOrbit) {
  EXPECT_EQ(render(0, dir / "d0.svg"), 3u);
  EXPECT_EQ(render(1, dir / "d1.svg"), 6u);
  EXPECT_EQ(render(2, dir / "d2.txt", RenderFormat::points), 15u);
  EXPECT_EQ(orbit_points(5).size(), 366u);
  for (const auto& p : orbit_points(4)) EXPECT_TRUE(in_triangle(p));
}

TEST_F(RenderTest, PointListIsExact) {
  render(1, dir / "d1.txt", RenderFormat::points);
  std::ifstream in(dir / "d1.txt");
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  ASSERT_EQ(lines.size(), 6u);
  EXPECT_EQ(lines[0], "1/2 0 0 1/2");
  EXPECT_EQ(lines[1], "0 0 0 0");
  EXPECT_EQ(lines[2], "1 0 0 0");
}

TEST_F(RenderTest, SvgIsWellFormed) {
  render(3, dir / "d3.svg");
  std::ifstream in(dir / "d3.svg");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string svg = buf.str();
  EXPECT_NE(svg.find("<svg"), std::string::npos);
  EXPECT_NE(svg.find("version=\"1.1\""), std::string::npos);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  std::size_t circles = 0;
  for (auto pos = svg.find("<circle"); pos != std::string::npos; pos = svg.find("<circle", pos + 1)) ++circles;
  EXPECT_EQ(circles, 42u);
}

TEST_F(RenderTest, DepthGuard) {
  EXPECT_THROW(render(13, dir / "big.svg"), ResourceGuardError);
  EXPECT_THROW(render(1, dir / "missing" / "x.svg"), std::invalid_argument);
}

}  // namespace
}  // namespace gasket
