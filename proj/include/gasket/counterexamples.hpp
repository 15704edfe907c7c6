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
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "gasket/address.hpp"
#include "gasket/algebra.hpp"
#include "gasket/coalgebra.hpp"
#include "gasket/space.hpp"
#include "gasket/surd.hpp"

namespace gasket {

/// A point of Delta: the bottom edge {(s, 0) : 0 <= s <= 1} plus the apex
/// (1/2, sqrt3/2).
class DeltaPoint {
 public:
  static DeltaPoint apex() { return DeltaPoint(); }
  /// Throws std::invalid_argument unless 0 <= s <= 1.
  static DeltaPoint at(const Rational& s);

  bool is_apex() const { return !s_.has_value(); }
  /// Throws std::logic_error on the apex.
  const Rational& s() const;
  std::string str() const;

  friend bool operator==(const DeltaPoint&, const DeltaPoint&) = default;
  friend std::ostream& operator<<(std::ostream& out, const DeltaPoint& p) { return out << p.str(); }

 private:
  DeltaPoint() = default;
  std::optional<Rational> s_;
};

/// Delta with the Euclidean metric; T = apex, L = (0,0), R = (1,0).
TriPointedSpace<DeltaPoint, Surd> delta_space();

/// Every case of e' whose interval contains the point. Endpoints 1/4, 1/2,
/// 3/4 match two cases.
std::vector<std::pair<Label, DeltaPoint>> delta_cases(const DeltaPoint& p);

/// e'(apex) = a(x)apex; on the edge
///   [0, 1/4] -> b(x)0, [1/4, 1/2] -> b(x)(4s-1), [1/2, 3/4] -> c(x)(4s-2), [3/4, 1] -> c(x)1.
/// 2-Lipschitz but its mediating map into the final coalgebra is not Lipschitz.
Coalgebra<DeltaPoint, Surd> delta_coalgebra();

/// All overlapping cases of e' give the same point of M (x) Delta.
bool delta_cases_agree();

enum class YPoint { t, l, r };
std::string to_string(YPoint y);

/// {t, l, r} with the discrete metric.
TriPointedSpace<YPoint, Rational> y_space();

/// alpha(a(x)t) = t, alpha(c(x)r) = r, alpha = l otherwise. Its mediating map
/// out of G is not continuous.
Algebra<YPoint, Rational> y_algebra();

/// e on I: e(a(x)T) = T; e(a(x)L) = e(b(x)T) = e(b(x)L) = L; R otherwise.
Algebra<Terminal, Rational> i_algebra();

/// Two addresses close in G whose images under a mediating map are far apart.
struct NonContinuityWitness {
  std::size_t n = 0;
  CanonicalAddress near;
  CanonicalAddress base;
  std::string near_image;
  std::string base_image;
  Rational domain_distance;
  Rational image_distance;
};

/// near = [a^n.L], base = [T], for the Y algebra.
NonContinuityWitness y_witness(std::size_t n);
/// near = [b^n.R], base = [L], for the algebra on I.
NonContinuityWitness i_witness(std::size_t n);

struct DeltaRow {
  std::size_t n = 0;
  std::size_t depth = 0;
  Rational x;
  Rational y;
  Rational dist_domain;     // |x - y|
  Rational dist_image;      // d_G(theta(x), theta(y))
  Rational ratio;
  Rational bound;           // 2 * 2^n
  Rational x_limit_error;   // d_G(theta(x), [L])
  Rational y_limit_error;   // d_G(theta(y), [b^n.R])
};

struct DeltaReport {
  std::vector<DeltaRow> rows;
  Rational tolerance;  // allowed limit error
  Rational slack;      // allowed shortfall of ratio below bound

  bool limits_identified() const;
  bool ratios_diverge() const;
  std::string csv() const;
  std::string text() const;
};

inline constexpr std::size_t kDeltaReportMaxN = 12;

/// For n = 1..n_max: x_n = sum_{j<=n} 4^-j + 4^-(n+1) and
/// y_n = sum_{j<=n} 4^-j + 3*4^-(n+1), evaluated at depth n + extra_depth.
/// Throws ResourceGuardError for n_max > kDeltaReportMaxN.
DeltaReport delta_nonlipschitz_report(std::size_t n_max, std::size_t extra_depth = 16);

}  // namespace gasket
