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

#include <cstddef>
#include <filesystem>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "gasket/address.hpp"
#include "gasket/algebra.hpp"
#include "gasket/coalgebra.hpp"
#include "gasket/qsqrt3.hpp"
#include "gasket/space.hpp"
#include "gasket/surd.hpp"

namespace gasket {

/// A point of the plane in exact coordinates. The unit triangle has
/// vertices T = (1/2, sqrt3/2), L = (0, 0), R = (1, 0).
struct Point2 {
  QSqrt3 x;
  QSqrt3 y;

  std::string str() const { return "(" + x.str() + ", " + y.str() + ")"; }
  friend bool operator==(const Point2&, const Point2&) = default;
  friend std::ostream& operator<<(std::ostream& out, const Point2& p) { return out << p.str(); }
};

Point2 vertex(Terminal d);

/// sigma_a(p) = p/2 + (1/4, sqrt3/4), sigma_b(p) = p/2, sigma_c(p) = p/2 + (1/2, 0).
Point2 sigma(Label m, const Point2& p);

/// The inverse affine map of sigma(m, .).
Point2 sigma_preimage(Label m, const Point2& p);

/// sigma_m1 o ... o sigma_mn (vertex(d)). Glued words give equal points.
Point2 coords(const AddressWord& w);
inline Point2 coords(const CanonicalAddress& x) { return coords(x.word()); }

/// Closed unit triangle, exactly.
bool in_triangle(const Point2& p);

/// The cell of p and its preimage there. a if y >= sqrt3/4, else b if
/// x <= 1/2, else c, so junctions resolve a over b, a over c, b over c.
/// Only meaningful for finitely addressed gasket points. Throws
/// std::domain_error when p or its preimage leaves the closed triangle.
std::pair<Label, Point2> sigma_inv(const Point2& p);

/// Repeated sigma_inv, stopping early on an exact vertex. If no vertex is
/// reached the terminal is the anchor of the last label. Throws
/// std::invalid_argument when depth is 0 and p is not a vertex.
AddressWord address_of(const Point2& p, std::size_t depth);

/// ||p - q||^2 in Q(sqrt3).
QSqrt3 squared_distance(const Point2& p, const Point2& q);

/// ||p - q||. Throws std::domain_error if the squared distance is irrational,
/// which never happens for finitely addressed points.
Surd euclidean(const Point2& p, const Point2& q);

/// The gasket with the Euclidean metric.
using GasketSpace = TriPointedSpace<Point2, Surd>;
GasketSpace gasket_space();

/// tau(m (x) x) = sigma_m(x).
Algebra<Point2, Surd> gasket_tau();

/// sigma = tau^-1 on finitely addressed points.
Coalgebra<Point2, Surd> gasket_sigma();

inline constexpr std::size_t kRenderMaxDepth = 12;

/// coords of every canonical address of level <= depth, (3^(depth+1)+3)/2 of
/// them. Throws ResourceGuardError beyond kRenderMaxDepth.
std::vector<Point2> orbit_points(std::size_t depth);

enum class RenderFormat { svg, points };

/// Writes the orbit as SVG 1.1, or as a point list with one point per line:
/// "xu xv yu yv" for x = xu + xv*sqrt3, y = yu + yv*sqrt3. Returns the count.
std::size_t render(std::size_t depth, const std::filesystem::path& out, RenderFormat format = RenderFormat::svg);

}  // namespace gasket
