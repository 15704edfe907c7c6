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
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gasket/address.hpp"
#include "gasket/metric.hpp"
#include "gasket/space.hpp"

namespace gasket {

/// An F-coalgebra e: X -> M (x) X. At a junction image either of the two
/// glued representatives may be returned.
template <class P, class S = Rational>
struct Coalgebra {
  std::string name;
  TriPointedSpace<P, S> space;
  std::function<std::pair<Label, P>(const P&)> structure;

  std::pair<Label, P> operator()(const P& x) const { return structure(x); }
};

/// Throws std::invalid_argument unless e(T), e(L), e(R) equal a(x)T, b(x)L,
/// c(x)R as points of M (x) X.
template <class P, class S>
void validate(const Coalgebra<P, S>& co) {
  const auto& X = co.space;
  for (Terminal d : kTerminals) {
    const auto [m, y] = co(X.corner(d));
    const auto got = glue_normalize(X, m, y);
    const auto want = glue_normalize(X, pad(d), X.corner(d));
    if (got.label != want.label || !X.same(got.point, want.point)) {
      throw std::invalid_argument(co.name + ": e moves the distinguished point " + std::string{to_char(d)});
    }
  }
}

template <class P>
struct Unfolding {
  std::vector<Label> labels;
  P tail;
};

/// n steps of e, threading the tail point.
template <class P, class S>
Unfolding<P> unfold(const Coalgebra<P, S>& co, const P& x, std::size_t n) {
  Unfolding<P> out{{}, x};
  out.labels.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    auto [m, next] = co(out.tail);
    out.labels.push_back(m);
    out.tail = std::move(next);
  }
  return out;
}

/// theta_n computed from a chosen first step (m1, x1) of e(x).
template <class P, class S>
CanonicalAddress theta_from(const Coalgebra<P, S>& co, Label m1, const P& x1, std::size_t n) {
  if (n == 0) throw std::invalid_argument("theta needs depth >= 1");
  auto rest = unfold(co, x1, n - 1);
  std::vector<Label> labels;
  labels.reserve(n);
  labels.push_back(m1);
  labels.insert(labels.end(), rest.labels.begin(), rest.labels.end());
  const Terminal d = anchor(labels.back());
  return canonicalize(AddressWord(std::move(labels), d));
}

/// theta_n(x) = [m1 ... mn . d] with d the anchor of mn.
template <class P, class S>
CanonicalAddress theta(const Coalgebra<P, S>& co, const P& x, std::size_t n) {
  const auto [m1, x1] = co(x);
  return theta_from(co, m1, x1, n);
}

/// The mediating morphism into the final coalgebra at one point: the
/// sequence theta_n(x), within 2^-n of the limit.
class LimitPoint {
 public:
  explicit LimitPoint(std::function<CanonicalAddress(std::size_t)> generator) : generator_(std::move(generator)) {}

  CanonicalAddress at(std::size_t n) const { return generator_(n); }
  static Rational error_bound(std::size_t n) { return pow2(-static_cast<long>(n)); }

 private:
  std::function<CanonicalAddress(std::size_t)> generator_;
};

template <class P, class S>
LimitPoint mediate_to_final(const Coalgebra<P, S>& co, const P& x) {
  return LimitPoint([co, x](std::size_t n) { return theta(co, x, n); });
}

struct FinalityReport {
  bool pass = true;
  std::size_t checked = 0;
  Rational worst_ratio = 0;  // max of d / 2^(1-k); the square holds iff <= 1
  std::optional<std::string> witness;
};

/// For each x with e(x) = (m1, x1) and 2 <= k <= depth:
/// d_G(f_k(x), m1 . f_(k-1)(x1)) <= 2^(1-k), where f_k defaults to theta_k.
/// A candidate `mediator` replaces theta on both sides.
template <class P, class S>
FinalityReport finality_check(const Coalgebra<P, S>& co, const std::vector<P>& sample, std::size_t depth,
                              std::function<CanonicalAddress(const P&, std::size_t)> mediator = {}) {
  if (!mediator) mediator = [&co](const P& x, std::size_t n) { return theta(co, x, n); };
  FinalityReport report;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const auto [m1, x1] = co(sample[i]);
    for (std::size_t k = 2; k <= depth; ++k) {
      ++report.checked;
      const Dist d = dist_G(mediator(sample[i], k), prepend(m1, mediator(x1, k - 1)));
      const Rational ratio = d * pow2(static_cast<long>(k) - 1);
      if (report.worst_ratio < ratio) report.worst_ratio = ratio;
      if (ratio > 1 && report.pass) {
        report.pass = false;
        report.witness = "sample " + std::to_string(i) + " at depth " + std::to_string(k) + ": distance " +
                         to_fraction_string(d);
      }
    }
  }
  return report;
}

struct CauchyReport {
  bool pass = true;
  std::size_t checked = 0;
  std::optional<std::string> witness;
};

/// d_G(theta_p(x), theta_q(x)) <= 2^-p for all 1 <= p < q <= max_depth.
template <class P, class S>
CauchyReport uniform_cauchy_check(const Coalgebra<P, S>& co, const std::vector<P>& sample, std::size_t max_depth) {
  CauchyReport report;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    std::vector<CanonicalAddress> thetas;
    for (std::size_t n = 1; n <= max_depth; ++n) thetas.push_back(theta(co, sample[i], n));
    for (std::size_t p = 1; p <= max_depth; ++p) {
      for (std::size_t q = p + 1; q <= max_depth; ++q) {
        ++report.checked;
        if (dist_G(thetas[p - 1], thetas[q - 1]) > pow2(-static_cast<long>(p)) && report.pass) {
          report.pass = false;
          report.witness = "sample " + std::to_string(i) + " p=" + std::to_string(p) + " q=" + std::to_string(q);
        }
      }
    }
  }
  return report;
}

struct ModulusEntry {
  double domain;
  double image;
  double ratio;
};

struct ModulusReport {
  std::size_t depth = 0;
  std::size_t skipped = 0;  // pairs at distance zero
  std::vector<ModulusEntry> entries;
  double max_ratio = 0;
  std::optional<std::size_t> argmax;  // index into entries
  /// d_G(theta_n x, theta_n y) <= d(x, y) + 2 * 2^-n on every pair, exactly.
  bool short_within_slack = true;
  std::vector<ModulusRow> modulus;
};

/// Lipschitz ratios of theta_n over point pairs, with the exact
/// shortness-up-to-modulus check and an epsilon/delta table.
template <class P, class S>
ModulusReport modulus_report(const Coalgebra<P, S>& co, const std::vector<std::pair<P, P>>& pairs, std::size_t depth) {
  ModulusReport report;
  report.depth = depth;
  const auto epsilons = default_epsilons();
  std::vector<double> deltas(epsilons.size(), std::numeric_limits<double>::infinity());
  const Rational slack = 2 * pow2(-static_cast<long>(depth));
  for (const auto& [x, y] : pairs) {
    const S d = co.space.dist(x, y);
    if (d == S(0)) {
      ++report.skipped;
      continue;
    }
    const Dist dg = dist_G(theta(co, x, depth), theta(co, y, depth));
    if (S(d + S(slack)) < S(dg)) report.short_within_slack = false;
    const ModulusEntry entry{to_double(d), to_double(dg), to_double(dg) / to_double(d)};
    if (!report.argmax || entry.ratio > report.max_ratio) {
      report.max_ratio = entry.ratio;
      report.argmax = report.entries.size();
    }
    for (std::size_t k = 0; k < epsilons.size(); ++k) {
      if (entry.image >= epsilons[k] && entry.domain < deltas[k]) deltas[k] = entry.domain;
    }
    report.entries.push_back(entry);
  }
  for (std::size_t k = 0; k < epsilons.size(); ++k) report.modulus.push_back({epsilons[k], deltas[k]});
  return report;
}

}  // namespace gasket
