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

#include "gasket/counterexamples.hpp"

#include <sstream>
#include <stdexcept>

namespace gasket {

DeltaPoint DeltaPoint::at(const Rational& s) {
  if (s < 0 || s > 1) throw std::invalid_argument("Delta point " + to_fraction_string(s) + " is outside [0, 1]");
  DeltaPoint p;
  p.s_ = s;
  p.s_->canonicalize();
  return p;
}

const Rational& DeltaPoint::s() const {
  if (!s_) throw std::logic_error("the apex has no edge coordinate");
  return *s_;
}

std::string DeltaPoint::str() const { return s_ ? to_fraction_string(*s_) : "apex"; }

TriPointedSpace<DeltaPoint, Surd> delta_space() {
  auto metric = [](const DeltaPoint& p, const DeltaPoint& q) -> Surd {
    if (p.is_apex() && q.is_apex()) return Surd(0);
    if (!p.is_apex() && !q.is_apex()) return Surd(Rational(abs(p.s() - q.s())));
    const Rational s = p.is_apex() ? q.s() : p.s();
    const Rational dx = s - Rational(1, 2);
    return Surd::sqrt(dx * dx + Rational(3, 4));
  };
  return {"Delta", metric, {DeltaPoint::apex(), DeltaPoint::at(0), DeltaPoint::at(1)}};
}

std::vector<std::pair<Label, DeltaPoint>> delta_cases(const DeltaPoint& p) {
  if (p.is_apex()) return {{Label::a, DeltaPoint::apex()}};
  const Rational& s = p.s();
  const Rational q1(1, 4), q2(1, 2), q3(3, 4);
  std::vector<std::pair<Label, DeltaPoint>> out;
  if (s <= q1) out.emplace_back(Label::b, DeltaPoint::at(0));
  if (q1 <= s && s <= q2) out.emplace_back(Label::b, DeltaPoint::at(4 * s - 1));
  if (q2 <= s && s <= q3) out.emplace_back(Label::c, DeltaPoint::at(4 * s - 2));
  if (q3 <= s) out.emplace_back(Label::c, DeltaPoint::at(1));
  return out;
}

Coalgebra<DeltaPoint, Surd> delta_coalgebra() {
  return {"delta", delta_space(), [](const DeltaPoint& p) { return delta_cases(p).front(); }};
}

bool delta_cases_agree() {
  const auto space = delta_space();
  for (const Rational& s : {Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
    const auto cases = delta_cases(DeltaPoint::at(s));
    if (cases.size() != 2) return false;
    const auto first = glue_normalize(space, cases[0].first, cases[0].second);
    const auto second = glue_normalize(space, cases[1].first, cases[1].second);
    if (!(first == second)) return false;
  }
  return true;
}

std::string to_string(YPoint y) {
  switch (y) {
    case YPoint::t: return "t";
    case YPoint::l: return "l";
    case YPoint::r: return "r";
  }
  return "?";
}

TriPointedSpace<YPoint, Rational> y_space() {
  return {"Y", [](YPoint x, YPoint y) { return x == y ? Rational(0) : Rational(1); },
          {YPoint::t, YPoint::l, YPoint::r},
          std::vector<YPoint>{YPoint::t, YPoint::l, YPoint::r}};
}

Algebra<YPoint, Rational> y_algebra() {
  return {"Y", y_space(), [](Label m, YPoint p) {
            if (m == Label::a && p == YPoint::t) return YPoint::t;
            if (m == Label::c && p == YPoint::r) return YPoint::r;
            return YPoint::l;
          }};
}

Algebra<Terminal, Rational> i_algebra() {
  return {"I-e", initial_space(), [](Label m, Terminal d) {
            if (m == Label::a && d == Terminal::T) return Terminal::T;
            if ((m == Label::a && d == Terminal::L) || (m == Label::b && d != Terminal::R)) return Terminal::L;
            return Terminal::R;
          }};
}

NonContinuityWitness y_witness(std::size_t n) {
  const auto alg = y_algebra();
  NonContinuityWitness w;
  w.n = n;
  w.near = canonicalize(AddressWord(std::vector<Label>(n, Label::a), Terminal::L));
  w.base = CanonicalAddress::corner(Terminal::T);
  const YPoint fn = mediate_from_initial(alg, w.near);
  const YPoint fb = mediate_from_initial(alg, w.base);
  w.near_image = to_string(fn);
  w.base_image = to_string(fb);
  w.domain_distance = dist_G(w.near, w.base);
  w.image_distance = alg.space.dist(fn, fb);
  return w;
}

NonContinuityWitness i_witness(std::size_t n) {
  const auto alg = i_algebra();
  NonContinuityWitness w;
  w.n = n;
  w.near = canonicalize(AddressWord(std::vector<Label>(n, Label::b), Terminal::R));
  w.base = CanonicalAddress::corner(Terminal::L);
  const Terminal fn = mediate_from_initial(alg, w.near);
  const Terminal fb = mediate_from_initial(alg, w.base);
  w.near_image = std::string{to_char(fn)};
  w.base_image = std::string{to_char(fb)};
  w.domain_distance = dist_G(w.near, w.base);
  w.image_distance = alg.space.dist(fn, fb);
  return w;
}

bool DeltaReport::limits_identified() const {
  for (const auto& row : rows) {
    if (row.x_limit_error > tolerance || row.y_limit_error > tolerance) return false;
  }
  return true;
}

bool DeltaReport::ratios_diverge() const {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].ratio < rows[i].bound - slack) return false;
    if (i > 0 && !(rows[i - 1].ratio < rows[i].ratio)) return false;
  }
  return true;
}

std::string DeltaReport::csv() const {
  std::ostringstream out;
  out << "n,x,y,dist_domain,dist_image,ratio,bound\n";
  for (const auto& r : rows) {
    out << r.n << ',' << to_fraction_string(r.x) << ',' << to_fraction_string(r.y) << ','
        << to_fraction_string(r.dist_domain) << ',' << to_fraction_string(r.dist_image) << ','
        << to_fraction_string(r.ratio) << ',' << to_fraction_string(r.bound) << '\n';
  }
  return out.str();
}

std::string DeltaReport::text() const {
  std::ostringstream out;
  for (const auto& r : rows) {
    out << "n=" << r.n << " depth=" << r.depth << " x=" << to_fraction_string(r.x) << " y=" << to_fraction_string(r.y)
        << " |x-y|=" << to_fraction_string(r.dist_domain) << " d_G=" << to_fraction_string(r.dist_image)
        << " ratio=" << to_fraction_string(r.ratio) << " (>= " << to_fraction_string(r.bound) << ")\n";
  }
  out << "limits within " << to_fraction_string(tolerance) << ": " << (limits_identified() ? "yes" : "no") << '\n';
  return out.str();
}

DeltaReport delta_nonlipschitz_report(std::size_t n_max, std::size_t extra_depth) {
  if (n_max > kDeltaReportMaxN) {
    throw ResourceGuardError("Delta report limited to n <= " + std::to_string(kDeltaReportMaxN));
  }
  const auto co = delta_coalgebra();
  DeltaReport report;
  report.tolerance = pow2(-static_cast<long>(extra_depth));
  report.slack = pow2(-10);
  Rational prefix = 0;
  for (std::size_t n = 1; n <= n_max; ++n) {
    prefix += pow2(-2 * static_cast<long>(n));
    const Rational tail = pow2(-2 * static_cast<long>(n + 1));
    DeltaRow row;
    row.n = n;
    row.depth = n + extra_depth;
    row.x = prefix + tail;
    row.y = prefix + 3 * tail;
    const auto tx = theta(co, DeltaPoint::at(row.x), row.depth);
    const auto ty = theta(co, DeltaPoint::at(row.y), row.depth);
    row.dist_domain = abs(row.y - row.x);
    row.dist_image = dist_G(tx, ty);
    row.ratio = row.dist_image / row.dist_domain;
    row.bound = 2 * pow2(static_cast<long>(n));
    row.x_limit_error = dist_G(tx, CanonicalAddress::corner(Terminal::L));
    row.y_limit_error = dist_G(ty, canonicalize(AddressWord(std::vector<Label>(n, Label::b), Terminal::R)));
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace gasket
