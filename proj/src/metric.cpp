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

#include "gasket/metric.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace gasket {

JunctionEntry junction(Label first, Label second) {
  if (first == second) throw std::invalid_argument("junction: labels must differ");
  Label third = Label::a;
  for (Label m : kLabels) {
    if (m != first && m != second) third = m;
  }
  return {touching_corner(first, second), touching_corner(second, first), touching_corner(first, third),
          touching_corner(second, third), third};
}

namespace {

using Corners = std::array<Dist, 3>;

Corners terminal_corners(Terminal d) {
  Corners c;
  for (Terminal e : kTerminals) c[index(e)] = (e == d) ? Dist(0) : Dist(1);
  return c;
}

// Corner distances of m.x given those of x. The corner e of the next level is
// pad(e).e', so it lives in copy pad(e) at that copy's own corner e.
Corners lift_corners(Label m, const Corners& tail) {
  Corners out;
  for (Terminal e : kTerminals) {
    const Label home = pad(e);
    if (m == home) {
      out[index(e)] = half(tail[index(e)]);
    } else {
      out[index(e)] = cross_copy_distance<Dist>(m, tail, home, terminal_corners(e));
    }
  }
  return out;
}

Corners suffix_corners(std::span<const Label> labels, std::size_t from, Terminal d) {
  Corners c = terminal_corners(d);
  for (std::size_t i = labels.size(); i > from; --i) c = lift_corners(labels[i - 1], c);
  return c;
}

}  // namespace

Corners corner_distances(const AddressWord& w) { return suffix_corners(w.labels(), 0, w.terminal()); }

Dist dist_level(const AddressWord& u, const AddressWord& v, std::size_t level) {
  if (u.level() != level || v.level() != level) {
    throw std::invalid_argument("dist_level: words " + u.str() + " and " + v.str() + " are not both at level " +
                                std::to_string(level));
  }
  const auto lu = u.labels();
  const auto lv = v.labels();
  std::size_t i = 0;
  while (i < level && lu[i] == lv[i]) ++i;
  const Dist scale = pow2(-static_cast<long>(i));
  if (i == level) return u.terminal() == v.terminal() ? Dist(0) : scale;

  const Corners cu = suffix_corners(lu, i + 1, u.terminal());
  const Corners cv = suffix_corners(lv, i + 1, v.terminal());
  return Dist(scale * cross_copy_distance<Dist>(lu[i], cu, lv[i], cv));
}

Dist dist_G(const CanonicalAddress& u, const CanonicalAddress& v) {
  const std::size_t level = std::max(u.level(), v.level());
  return dist_level(embed(u.word(), level), embed(v.word(), level), level);
}

bool diameter_bound_check(std::span<const Label> prefix, const AddressWord& x1, const AddressWord& x2) {
  if (x1.level() != x2.level()) throw std::invalid_argument("diameter_bound_check: tails must share a level");
  std::vector<Label> l1(prefix.begin(), prefix.end());
  std::vector<Label> l2 = l1;
  l1.insert(l1.end(), x1.labels().begin(), x1.labels().end());
  l2.insert(l2.end(), x2.labels().begin(), x2.labels().end());
  const std::size_t level = l1.size();
  const Dist d = dist_level(AddressWord(std::move(l1), x1.terminal()), AddressWord(std::move(l2), x2.terminal()), level);
  return d <= pow2(-static_cast<long>(prefix.size()));
}

}  // namespace gasket
