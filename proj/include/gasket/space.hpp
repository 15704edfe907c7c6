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
#include <cmath>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "gasket/address.hpp"
#include "gasket/metric.hpp"
#include "gasket/rational.hpp"
#include "gasket/surd.hpp"

namespace gasket {

/// A 1-bounded metric space with distinguished points T, L, R pairwise at
/// distance 1. The carrier is optional: finite spaces enumerate it, others
/// (G, the gasket, Delta) only answer distance queries.
///
/// `S` is the metric scalar, Rational or Surd.
template <class P, class S = Rational>
class TriPointedSpace {
 public:
  using Point = P;
  using Scalar = S;
  using Metric = std::function<S(const P&, const P&)>;
  using Equality = std::function<bool(const P&, const P&)>;

  TriPointedSpace(std::string name, Metric metric, std::array<P, 3> corners,
                  std::optional<std::vector<P>> carrier = std::nullopt, Equality equal = {})
      : name_(std::move(name)),
        metric_(std::move(metric)),
        corners_(std::move(corners)),
        carrier_(std::move(carrier)),
        equal_(std::move(equal)) {}

  const std::string& name() const { return name_; }
  S dist(const P& x, const P& y) const { return metric_(x, y); }
  const P& corner(Terminal d) const { return corners_[index(d)]; }
  const std::array<P, 3>& corners() const { return corners_; }

  bool finite() const { return carrier_.has_value(); }
  const std::vector<P>& carrier() const {
    if (!carrier_) throw std::logic_error(name_ + " has no finite carrier");
    return *carrier_;
  }

  /// Equality of points of the space, which may be coarser than P's ==.
  bool same(const P& x, const P& y) const { return equal_ ? equal_(x, y) : x == y; }

  std::optional<Terminal> corner_of(const P& x) const {
    for (Terminal d : kTerminals) {
      if (same(x, corner(d))) return d;
    }
    return std::nullopt;
  }

 private:
  std::string name_;
  Metric metric_;
  std::array<P, 3> corners_;
  std::optional<std::vector<P>> carrier_;
  Equality equal_;
};

/// Largest finite carrier validate() checks exhaustively (cubic in the size).
inline constexpr std::size_t kValidateMaxPoints = 400;

/// Checks the corner distances and, for a finite carrier, the metric axioms
/// and 1-boundedness. Throws std::invalid_argument naming the first violation.
template <class P, class S>
void validate(const TriPointedSpace<P, S>& space) {
  const auto fail = [&](const std::string& what) { throw std::invalid_argument(space.name() + ": " + what); };
  for (Terminal d : kTerminals) {
    for (Terminal e : kTerminals) {
      const S expected = d == e ? S(0) : S(1);
      if (!(space.dist(space.corner(d), space.corner(e)) == expected)) {
        fail(std::string("distance between distinguished points ") + to_char(d) + " and " + to_char(e));
      }
    }
  }
  if (!space.finite()) return;
  const auto& pts = space.carrier();
  if (pts.size() > kValidateMaxPoints) return;
  for (const auto& x : pts) {
    for (const auto& y : pts) {
      const S dxy = space.dist(x, y);
      if (dxy < S(0) || S(1) < dxy) fail("distance outside [0, 1]");
      if (!(dxy == space.dist(y, x))) fail("asymmetric distance");
      if ((dxy == S(0)) != space.same(x, y)) fail("zero distance between distinct points");
      for (const auto& z : pts) {
        if (space.dist(x, z) + space.dist(z, y) < dxy) fail("triangle inequality");
      }
    }
  }
}

/// A point m (x) x of M (x) X.
template <class P>
struct TensorPoint {
  Label label;
  P point;
  friend bool operator==(const TensorPoint&, const TensorPoint&) = default;
};

/// The representative of m (x) p used throughout: (b,T), (c,T), (c,L) are
/// replaced by (a,L), (a,R), (b,R), and corners by the stored corner value.
template <class P, class S>
TensorPoint<P> glue_normalize(const TriPointedSpace<P, S>& base, Label m, const P& p) {
  const auto d = base.corner_of(p);
  if (!d) return {m, p};
  const bool rewrite = (m == Label::b && *d == Terminal::T) || (m == Label::c && *d != Terminal::R);
  if (rewrite) {
    const auto [gm, gd] = *glued_with(m, *d);
    return {gm, base.corner(gd)};
  }
  return {m, base.corner(*d)};
}

template <class P, class S>
using TensorSpace = TriPointedSpace<TensorPoint<P>, S>;

/// F(X) = M (x) X with the quotient metric: half the base distance inside a
/// copy, the shortest junction path across copies.
template <class P, class S>
TensorSpace<P, S> tensor(const TriPointedSpace<P, S>& base) {
  validate(base);
  auto corner_dists = [base](const P& x) {
    return std::array<S, 3>{base.dist(x, base.corner(Terminal::T)), base.dist(x, base.corner(Terminal::L)),
                            base.dist(x, base.corner(Terminal::R))};
  };
  auto metric = [base, corner_dists](const TensorPoint<P>& u, const TensorPoint<P>& v) -> S {
    if (u.label == v.label) return half(base.dist(u.point, v.point));
    return cross_copy_distance<S>(u.label, corner_dists(u.point), v.label, corner_dists(v.point));
  };
  auto equal = [base](const TensorPoint<P>& u, const TensorPoint<P>& v) {
    const auto nu = glue_normalize(base, u.label, u.point);
    const auto nv = glue_normalize(base, v.label, v.point);
    return nu.label == nv.label && base.same(nu.point, nv.point);
  };
  std::optional<std::vector<TensorPoint<P>>> carrier;
  if (base.finite()) {
    carrier.emplace();
    for (Label m : kLabels) {
      for (const auto& p : base.carrier()) {
        const auto t = glue_normalize(base, m, p);
        bool seen = false;
        for (const auto& q : *carrier) seen = seen || equal(q, t);
        if (!seen) carrier->push_back(t);
      }
    }
  }
  std::array<TensorPoint<P>, 3> corners{TensorPoint<P>{Label::a, base.corner(Terminal::T)},
                                        TensorPoint<P>{Label::b, base.corner(Terminal::L)},
                                        TensorPoint<P>{Label::c, base.corner(Terminal::R)}};
  return TensorSpace<P, S>("M(x)" + base.name(), metric, corners, std::move(carrier), equal);
}

/// Morphism classes of the three categories of tri-pointed metric spaces,
/// plus isometric embeddings.
struct MapClass {
  enum class Kind { short_map, lipschitz, isometric, continuous };
  Kind kind = Kind::short_map;
  Rational constant = 1;

  static MapClass short_map() { return {Kind::short_map, Rational(1)}; }
  static MapClass lipschitz(const Rational& k) { return {Kind::lipschitz, k}; }
  static MapClass isometric() { return {Kind::isometric, Rational(1)}; }
  static MapClass continuous() { return {Kind::continuous, Rational(1)}; }

  std::string str() const {
    switch (kind) {
      case Kind::short_map: return "short";
      case Kind::lipschitz: return "lipschitz(" + to_fraction_string(constant) + ")";
      case Kind::isometric: return "isometric";
      case Kind::continuous: return "continuous";
    }
    return "?";
  }
};

/// A map between tri-pointed spaces together with the class it claims.
template <class Domain, class Codomain>
struct MapWitness {
  using DomainPoint = typename Domain::Point;
  using CodomainPoint = typename Codomain::Point;

  Domain domain;
  Codomain codomain;
  std::function<CodomainPoint(const DomainPoint&)> f;
  MapClass claimed;

  CodomainPoint operator()(const DomainPoint& x) const { return f(x); }
};

template <class Domain, class Codomain>
bool preserves_distinguished(const MapWitness<Domain, Codomain>& w) {
  for (Terminal d : kTerminals) {
    if (!w.codomain.same(w(w.domain.corner(d)), w.codomain.corner(d))) return false;
  }
  return true;
}

/// Builds a witness; throws std::invalid_argument unless f(T)=T, f(L)=L, f(R)=R.
template <class Domain, class Codomain, class F>
MapWitness<Domain, Codomain> make_map(Domain domain, Codomain codomain, F f, MapClass claimed) {
  MapWitness<Domain, Codomain> w{std::move(domain), std::move(codomain), std::move(f), claimed};
  if (!preserves_distinguished(w)) {
    throw std::invalid_argument("map " + w.domain.name() + " -> " + w.codomain.name() +
                                " does not preserve distinguished points");
  }
  return w;
}

/// M (x) f, claiming the same class as f.
template <class Domain, class Codomain>
auto tensor_map(const MapWitness<Domain, Codomain>& w) {
  using DP = typename Domain::Point;
  auto td = tensor(w.domain);
  auto tc = tensor(w.codomain);
  auto f = [f = w.f, cod = w.codomain](const TensorPoint<DP>& u) { return glue_normalize(cod, u.label, f(u.point)); };
  return MapWitness<decltype(td), decltype(tc)>{std::move(td), std::move(tc), std::move(f), w.claimed};
}

template <class A, class B>
using CommonScalar = std::conditional_t<std::is_same_v<A, Rational> && std::is_same_v<B, Rational>, Rational, Surd>;

/// One row of an empirical modulus of continuity: among the checked pairs,
/// every pair closer than `delta` had images closer than `epsilon`.
struct ModulusRow {
  double epsilon;
  double delta;
};

inline std::vector<double> default_epsilons() {
  std::vector<double> eps;
  for (int k = 1; k <= 8; ++k) eps.push_back(std::ldexp(1.0, -k));
  return eps;
}

template <class P>
struct CertifyReport {
  MapClass claimed;
  std::optional<bool> pass;  // nullopt for the continuous class
  std::size_t pairs_checked = 0;
  std::optional<std::pair<P, P>> violation;  // first pair breaking the claim
  std::optional<std::pair<P, P>> worst_pair;  // pair attaining best_constant
  double best_constant = 0;                   // max d(fx,fy)/d(x,y) seen
  std::optional<Rational> exact_best_constant;
  std::vector<ModulusRow> modulus;
};

/// Checks the claimed class on every pair of a finite domain, or on `pairs`.
/// Throws std::logic_error for an infinite domain without a sample.
template <class Domain, class Codomain>
CertifyReport<typename Domain::Point> certify(
    const MapWitness<Domain, Codomain>& w,
    const std::optional<std::vector<std::pair<typename Domain::Point, typename Domain::Point>>>& sample = std::nullopt) {
  using P = typename Domain::Point;
  using C = CommonScalar<typename Domain::Scalar, typename Codomain::Scalar>;
  std::vector<std::pair<P, P>> pairs;
  if (sample) {
    pairs = *sample;
  } else {
    const auto& pts = w.domain.carrier();
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) pairs.emplace_back(pts[i], pts[j]);
    }
  }

  CertifyReport<P> report;
  report.claimed = w.claimed;
  const auto epsilons = default_epsilons();
  std::vector<double> deltas(epsilons.size(), std::numeric_limits<double>::infinity());
  std::optional<Rational> exact_best;
  bool ok = true;
  for (const auto& [x, y] : pairs) {
    const C dx = C(w.domain.dist(x, y));
    const C dy = C(w.codomain.dist(w(x), w(y)));
    ++report.pairs_checked;
    bool held = true;
    switch (w.claimed.kind) {
      case MapClass::Kind::short_map: held = !(dx < dy); break;
      case MapClass::Kind::lipschitz: held = !(C(w.claimed.constant) * dx < dy); break;
      case MapClass::Kind::isometric: held = dx == dy; break;
      case MapClass::Kind::continuous: held = !(dx == C(0)) || dy == C(0); break;
    }
    if (!held && ok) report.violation = std::make_pair(x, y);
    ok = ok && held;
    if (dx == C(0)) continue;
    const double ddx = to_double(dx);
    const double ddy = to_double(dy);
    for (std::size_t k = 0; k < epsilons.size(); ++k) {
      if (ddy >= epsilons[k] && ddx < deltas[k]) deltas[k] = ddx;
    }
    const double ratio = ddy / ddx;
    if constexpr (std::is_same_v<C, Rational>) {
      const Rational exact = dy / dx;
      if (!exact_best || *exact_best < exact) {
        exact_best = exact;
        report.worst_pair = std::make_pair(x, y);
      }
      report.best_constant = to_double(*exact_best);
    } else if (!report.worst_pair || ratio > report.best_constant) {
      report.best_constant = ratio;
      report.worst_pair = std::make_pair(x, y);
    }
  }
  report.exact_best_constant = exact_best;
  if (w.claimed.kind != MapClass::Kind::continuous) report.pass = ok;
  for (std::size_t k = 0; k < epsilons.size(); ++k) report.modulus.push_back({epsilons[k], deltas[k]});
  return report;
}

/// The initial object I = {T, L, R} with the discrete metric.
using InitialSpace = TriPointedSpace<Terminal, Rational>;
InitialSpace initial_space();

template <class Space>
MapWitness<Space, Space> identity_map(const Space& space) {
  return MapWitness<Space, Space>{space, space, [](const typename Space::Point& x) { return x; },
                                  MapClass::isometric()};
}

/// eta: I -> X, the unique morphism out of I.
template <class Space>
MapWitness<InitialSpace, Space> initial_map(const Space& space) {
  return make_map(initial_space(), space, [space](Terminal d) { return space.corner(d); }, MapClass::isometric());
}

/// G with its canonical metric. No finite carrier.
using AddressSpace = TriPointedSpace<CanonicalAddress, Rational>;
AddressSpace address_space();

/// The image of M^n (x) I in G: canonical addresses of level <= n.
AddressSpace approximant_space(std::size_t level);

/// Finite space loaded from text. Points are named; the format is
///
///   # comment
///   points: T L R p
///   distinguished: T L R
///   matrix:
///   0 1 1 1/2
///   ...
///
/// with one row of fractions per point. Throws std::invalid_argument on
/// malformed input or when the table is not a valid tri-pointed metric.
using FiniteSpace = TriPointedSpace<std::string, Rational>;
FiniteSpace parse_finite_space(std::string_view text, std::string name = "finite");
FiniteSpace load_finite_space(const std::filesystem::path& path);

}  // namespace gasket
