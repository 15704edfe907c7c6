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

#include <array>
#include <cstddef>
#include <span>

#include "gasket/address.hpp"
#include "gasket/rational.hpp"

namespace gasket {

/// Exact metric value in [0, 1]. On level-n words the denominator divides 2^n.
using Dist = Rational;

/// How two distinct copies of M (x) X meet. A shortest path between them
/// either crosses the direct junction or runs through the third copy, whose
/// two junction corners are at distance 1.
struct JunctionEntry {
  Terminal direct_first;   // corner of the first copy glued to the second
  Terminal direct_second;  // corner of the second copy glued to the first
  Terminal via_first;      // corner of the first copy glued to the third
  Terminal via_second;     // corner of the second copy glued to the third
  Label third;
};

/// Throws std::invalid_argument when first == second.
JunctionEntry junction(Label first, Label second);

/// The quotient-metric formula on M (x) X for points in different copies,
/// given the distances of each tail to the corners of X. `dx` are the
/// distances of x (in copy `first`) to T, L, R; likewise `dy`.
template <class Scalar, class Corners>
Scalar cross_copy_distance(Label first, const Corners& dx, Label second, const Corners& dy) {
  const auto j = junction(first, second);
  const Scalar direct = dx[index(j.direct_first)] + dy[index(j.direct_second)];
  const Scalar via = dx[index(j.via_first)] + Scalar(1) + dy[index(j.via_second)];
  return half(direct < via ? direct : via);
}

/// Distances from w to the three distinguished points a^n.T, b^n.L, c^n.R of
/// its own level, indexed by Terminal. Linear in the level.
std::array<Dist, 3> corner_distances(const AddressWord& w);

/// Exact quotient metric on M^n (x) I. Throws std::invalid_argument unless
/// both words have level n.
Dist dist_level(const AddressWord& u, const AddressWord& v, std::size_t level);

/// The canonical metric on G: both words are embedded at the larger level.
Dist dist_G(const CanonicalAddress& u, const CanonicalAddress& v);

/// d(m x1, m x2) <= 2^-n for a prefix m of length n.
bool diameter_bound_check(std::span<const Label> prefix, const AddressWord& x1, const AddressWord& x2);

}  // namespace gasket
