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

#include "gasket/geometry.hpp"

#include <fstream>
#include <stdexcept>

namespace gasket {

namespace {

const QSqrt3 kQuarter = QSqrt3(Rational(1, 4));
const QSqrt3 kHalf = QSqrt3(Rational(1, 2));
const QSqrt3 kQuarterRoot3 = QSqrt3(0, Rational(1, 4));
const QSqrt3 kHalfRoot3 = QSqrt3(0, Rational(1, 2));

Point2 offset(Label m) {
  switch (m) {
    case Label::a: return {kQuarter, kQuarterRoot3};
    case Label::b: return {0, 0};
    case Label::c: return {kHalf, 0};
  }
  return {};
}

}  // namespace

Point2 vertex(Terminal d) {
  switch (d) {
    case Terminal::T: return {kHalf, kHalfRoot3};
    case Terminal::L: return {0, 0};
    case Terminal::R: return {1, 0};
  }
  return {};
}

Point2 sigma(Label m, const Point2& p) {
  const Point2 o = offset(m);
  return {half(p.x) + o.x, half(p.y) + o.y};
}

Point2 sigma_preimage(Label m, const Point2& p) {
  const Point2 o = offset(m);
  return {QSqrt3(2) * (p.x - o.x), QSqrt3(2) * (p.y - o.y)};
}

Point2 coords(const AddressWord& w) {
  Point2 p = vertex(w.terminal());
  const auto labels = w.labels();
  for (auto it = labels.rbegin(); it != labels.rend(); ++it) p = sigma(*it, p);
  return p;
}

bool in_triangle(const Point2& p) {
  const QSqrt3 r3 = QSqrt3::sqrt3();
  return p.y.sign() >= 0 && !(r3 * p.x < p.y) && !(r3 * (QSqrt3(1) - p.x) < p.y);
}

std::pair<Label, Point2> sigma_inv(const Point2& p) {
  if (!in_triangle(p)) throw std::domain_error("point " + p.str() + " is outside the unit triangle");
  const Label m = !(p.y < kQuarterRoot3) ? Label::a : !(kHalf < p.x) ? Label::b : Label::c;
  Point2 pre = sigma_preimage(m, p);
  if (!in_triangle(pre)) throw std::domain_error("point " + p.str() + " is not in the gasket");
  return {m, std::move(pre)};
}

AddressWord address_of(const Point2& p, std::size_t depth) {
  std::vector<Label> labels;
  Point2 q = p;
  for (std::size_t k = 0;; ++k) {
    for (Terminal d : kTerminals) {
      if (q == vertex(d)) return AddressWord(std::move(labels), d);
    }
    if (k == depth) break;
    auto [m, pre] = sigma_inv(q);
    labels.push_back(m);
    q = std::move(pre);
  }
  if (labels.empty()) throw std::invalid_argument("depth 0 only addresses the three vertices");
  const Terminal d = anchor(labels.back());
  return AddressWord(std::move(labels), d);
}

QSqrt3 squared_distance(const Point2& p, const Point2& q) {
  const QSqrt3 dx = p.x - q.x;
  const QSqrt3 dy = p.y - q.y;
  return dx * dx + dy * dy;
}

Surd euclidean(const Point2& p, const Point2& q) {
  const auto sq = squared_distance(p, q).as_rational();
  if (!sq) throw std::domain_error("irrational squared distance between " + p.str() + " and " + q.str());
  return Surd::sqrt(*sq);
}

GasketSpace gasket_space() {
  return GasketSpace("gasket", euclidean, {vertex(Terminal::T), vertex(Terminal::L), vertex(Terminal::R)});
}

Algebra<Point2, Surd> gasket_tau() {
  return {"gasket-tau", gasket_space(), [](Label m, const Point2& p) { return sigma(m, p); }};
}

Coalgebra<Point2, Surd> gasket_sigma() {
  return {"gasket-sigma", gasket_space(), [](const Point2& p) { return sigma_inv(p); }};
}

std::vector<Point2> orbit_points(std::size_t depth) {
  if (depth > kRenderMaxDepth) {
    throw ResourceGuardError("render depth " + std::to_string(depth) + " exceeds " + std::to_string(kRenderMaxDepth));
  }
  std::vector<Point2> points;
  for (const auto& x : canonical_addresses(depth)) points.push_back(coords(x));
  return points;
}

std::size_t render(std::size_t depth, const std::filesystem::path& out, RenderFormat format) {
  const auto points = orbit_points(depth);
  std::ofstream file(out);
  if (!file) throw std::invalid_argument("cannot write " + out.string());
  if (format == RenderFormat::points) {
    for (const auto& p : points) {
      file << to_fraction_string(p.x.u()) << ' ' << to_fraction_string(p.x.v()) << ' ' << to_fraction_string(p.y.u())
           << ' ' << to_fraction_string(p.y.v()) << '\n';
    }
    return points.size();
  }
  constexpr double kSize = 1000.0;
  constexpr double kMargin = 10.0;
  const double height = kSize * 0.8660254037844386;
  const double radius = depth <= 4 ? 4.0 : depth <= 8 ? 1.5 : 0.6;
  file << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kSize + 2 * kMargin
       << "\" height=\"" << height + 2 * kMargin << "\">\n"
       << "<g fill=\"black\">\n";
  file.setf(std::ios::fixed);
  file.precision(3);
  for (const auto& p : points) {
    file << "<circle cx=\"" << kMargin + kSize * p.x.to_double() << "\" cy=\""
         << kMargin + height - kSize * p.y.to_double() << "\" r=\"" << radius << "\"/>\n";
  }
  file << "</g>\n</svg>\n";
  return points.size();
}

}  // namespace gasket
