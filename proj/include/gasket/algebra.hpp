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
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "gasket/address.hpp"
#include "gasket/space.hpp"

namespace gasket {

/// An F-algebra e: M (x) X -> X, given on unglued pairs (m, x).
template <class P, class S = Rational>
struct Algebra {
  std::string name;
  TriPointedSpace<P, S> space;
  std::function<P(Label, const P&)> structure;

  P operator()(Label m, const P& x) const { return structure(m, x); }
};

/// Throws std::invalid_argument unless e respects the three gluing relations
/// and sends a(x)T, b(x)L, c(x)R to T, L, R.
template <class P, class S>
void validate(const Algebra<P, S>& alg) {
  const auto& X = alg.space;
  for (Label m : kLabels) {
    for (Terminal d : kTerminals) {
      const auto other = glued_with(m, d);
      if (other && !X.same(alg(m, X.corner(d)), alg(other->first, X.corner(other->second)))) {
        throw std::invalid_argument(alg.name + ": e does not respect the gluing at " + std::string{to_char(m)} +
                                    "(x)" + to_char(d));
      }
    }
  }
  for (Terminal d : kTerminals) {
    if (!X.same(alg(pad(d), X.corner(d)), X.corner(d))) {
      throw std::invalid_argument(alg.name + ": e moves the distinguished point " + std::string{to_char(d)});
    }
  }
}

/// e_k(m1 (x) ... (x) mk (x) d_X): start at anchors[d] and apply e(mk, .),
/// ..., e(m1, .).
template <class P, class S>
P iterate_algebra(const Algebra<P, S>& alg, const AddressWord& word, const std::array<P, 3>& anchors) {
  P x = anchors[index(word.terminal())];
  const auto labels = word.labels();
  for (auto it = labels.rbegin(); it != labels.rend(); ++it) x = alg(*it, x);
  return x;
}

template <class P, class S>
P iterate_algebra(const Algebra<P, S>& alg, const AddressWord& word) {
  return iterate_algebra(alg, word, alg.space.corners());
}

/// The unique algebra morphism G -> X.
template <class P, class S>
P mediate_from_initial(const Algebra<P, S>& alg, const CanonicalAddress& x) {
  return iterate_algebra(alg, x.word());
}

struct MorphismReport {
  bool pass = true;
  std::size_t checked = 0;
  std::optional<std::string> witness;  // "m(x)u" of the first failure
};

/// Checks f(g(m (x) u)) = e(m, f(u)) for every canonical u of level <= depth.
template <class P, class S, class F>
MorphismReport check_algebra_morphism(const Algebra<P, S>& alg, F f, std::size_t depth) {
  MorphismReport report;
  for (const auto& u : canonical_addresses(depth)) {
    const P fu = f(u);
    for (Label m : kLabels) {
      ++report.checked;
      if (!alg.space.same(f(prepend(m, u)), alg(m, fu))) {
        if (report.pass) report.witness = std::string{to_char(m)} + "(x)" + u.str();
        report.pass = false;
      }
    }
  }
  return report;
}

}  // namespace gasket
