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

#include "gasket/acceptance.hpp"

#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "gasket/address.hpp"
#include "gasket/builtins.hpp"
#include "gasket/coalgebra.hpp"
#include "gasket/counterexamples.hpp"
#include "gasket/geometry.hpp"
#include "gasket/metric.hpp"
#include "gasket/oracle.hpp"
#include "gasket/space.hpp"

namespace gasket::verify {

namespace {

using Rng = std::mt19937_64;

Label draw_label(Rng& rng) { return kLabels[std::uniform_int_distribution<int>(0, 2)(rng)]; }

AddressWord draw_word(Rng& rng, std::size_t level) {
  std::vector<Label> labels(level);
  for (auto& m : labels) m = draw_label(rng);
  return AddressWord(std::move(labels), kTerminals[std::uniform_int_distribution<int>(0, 2)(rng)]);
}

std::size_t draw_level(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

AddressWord concat(std::span<const Label> prefix, const AddressWord& tail) {
  std::vector<Label> labels(prefix.begin(), prefix.end());
  labels.insert(labels.end(), tail.labels().begin(), tail.labels().end());
  return AddressWord(std::move(labels), tail.terminal());
}

std::vector<Point2> gasket_sample(Rng& rng, std::size_t count) {
  std::vector<Point2> pts{vertex(Terminal::T), vertex(Terminal::L), vertex(Terminal::R)};
  while (pts.size() < count) pts.push_back(coords(draw_word(rng, draw_level(rng, 1, 20))));
  return pts;
}

std::vector<DeltaPoint> delta_sample(Rng& rng, std::size_t count) {
  std::vector<DeltaPoint> pts{DeltaPoint::apex(), DeltaPoint::at(0), DeltaPoint::at(1), DeltaPoint::at(Rational(1, 2))};
  static constexpr long dens[] = {3, 5, 7, 16, 60, 64, 97, 1000, 4096, 65521};
  while (pts.size() < count) {
    const long den = dens[std::uniform_int_distribution<std::size_t>(0, std::size(dens) - 1)(rng)];
    Rational s(std::uniform_int_distribution<long>(0, den)(rng), den);
    s.canonicalize();
    pts.push_back(DeltaPoint::at(s));
  }
  return pts;
}

std::string count_detail(std::size_t checked, std::size_t failures, const std::string& what) {
  return std::to_string(checked) + " " + what + ", " + std::to_string(failures) + " failures";
}

CriterionResult metric_oracle_equivalence() {
  std::size_t checked = 0;
  std::size_t failures = 0;
  for (std::size_t n = 0; n <= 3; ++n) {
    const auto words = all_words(n);
    for (std::size_t i = 0; i < words.size(); ++i) {
      for (std::size_t j = i; j < words.size(); ++j) {
        ++checked;
        if (dist_level(words[i], words[j], n) != dist_oracle(words[i], words[j], n)) ++failures;
      }
    }
  }
  const std::size_t exhaustive = checked;
  Rng rng(1);
  for (int k = 0; k < 10000; ++k) {
    const auto u = draw_word(rng, 4);
    const auto v = draw_word(rng, 4);
    ++checked;
    if (dist_level(u, v, 4) != dist_oracle(u, v, 4)) ++failures;
  }
  return {1, "Metric oracle equivalence", failures == 0,
          std::to_string(exhaustive) + " exhaustive pairs (levels 0-3) + 10000 sampled at level 4, " +
              std::to_string(failures) + " mismatches"};
}

CriterionResult cell_diameter_bound() {
  Rng rng(2);
  std::size_t failures = 0;
  for (int k = 0; k < 10000; ++k) {
    const std::size_t n = draw_level(rng, 0, 10);
    const std::size_t t = draw_level(rng, 0, 10 - n);
    const auto prefix = draw_word(rng, n);
    if (!diameter_bound_check(prefix.labels(), draw_word(rng, t), draw_word(rng, t))) ++failures;
  }
  std::size_t diff_failures = 0;
  for (int k = 0; k < 10000; ++k) {
    const std::size_t n = draw_level(rng, 0, 10);
    const std::size_t t = draw_level(rng, 0, 10 - n);
    const auto pw = draw_word(rng, n);
    const auto d = [&](const AddressWord& x1, const AddressWord& x2) {
      return dist_level(concat(pw.labels(), x1), concat(pw.labels(), x2), n + t);
    };
    const Dist diff = abs(d(draw_word(rng, t), draw_word(rng, t)) - d(draw_word(rng, t), draw_word(rng, t)));
    if (diff > pow2(1 - static_cast<long>(n))) ++diff_failures;
  }
  return {2, "Cell diameter bound", failures == 0 && diff_failures == 0,
          "10000 pairs with d <= 2^-n (" + std::to_string(failures) + " failures), 10000 quadruples with " +
              "difference <= 2^(1-n) (" + std::to_string(diff_failures) + " failures)"};
}

CriterionResult structure_map_isometry() {
  Rng rng(3);
  const auto mg = tensor(address_space());
  std::size_t checked = 0;
  std::size_t failures = 0;
  for (int k = 0; k < 1000; ++k) {
    const auto u = canonicalize(draw_word(rng, draw_level(rng, 0, 8)));
    const auto v = canonicalize(draw_word(rng, draw_level(rng, 0, 8)));
    for (Label m : kLabels) {
      for (Label w : kLabels) {
        ++checked;
        if (mg.dist({m, u}, {w, v}) != dist_G(prepend(m, u), prepend(w, v))) ++failures;
      }
    }
  }
  return {3, "Structure map of G is an isometry", failures == 0,
          count_detail(checked, failures, "labelled pairs at levels <= 8")};
}

CriterionResult uniform_cauchy() {
  Rng rng(4);
  const auto g = uniform_cauchy_check(gasket_sigma(), gasket_sample(rng, 200), 14);
  const auto d = uniform_cauchy_check(delta_coalgebra(), delta_sample(rng, 200), 14);
  std::string detail = "gasket-sigma " + std::to_string(g.checked) + " checks" + (g.witness ? " [" + *g.witness + "]" : "") +
                       ", delta " + std::to_string(d.checked) + " checks" + (d.witness ? " [" + *d.witness + "]" : "");
  return {4, "Uniform Cauchy theta sequences", g.pass && d.pass, detail};
}

CriterionResult y_noncontinuity() {
  bool ok = true;
  std::string last;
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto w = y_witness(n);
    ok = ok && w.near_image == "l" && w.base_image == "t" && w.domain_distance == pow2(-static_cast<long>(n)) &&
         w.image_distance == 1;
    last = "n=" + std::to_string(n) + ": d_G=" + to_fraction_string(w.domain_distance) +
           ", image distance " + to_fraction_string(w.image_distance);
  }
  return {5, "Y algebra mediating map is not continuous", ok, "n=1..10, " + last};
}

CriterionResult i_noncontinuity() {
  const auto alg = i_algebra();
  bool ok = mediate_from_initial(alg, CanonicalAddress::corner(Terminal::L)) == Terminal::L;
  std::string last;
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto w = i_witness(n);
    ok = ok && w.near_image == "R" && w.base_image == "L" && w.domain_distance <= pow2(-static_cast<long>(n)) &&
         w.image_distance == 1;
    last = "n=" + std::to_string(n) + ": d_G=" + to_fraction_string(w.domain_distance) +
           ", image distance " + to_fraction_string(w.image_distance);
  }
  return {6, "Algebra on I has a discontinuous mediating map", ok, "n=1..10, " + last};
}

CriterionResult delta_divergence() {
  const auto report = delta_nonlipschitz_report(10, 16);
  const auto& last = report.rows.back();
  bool ok = report.limits_identified() && report.ratios_diverge() && last.ratio > 2048 - report.slack;
  for (const auto& row : report.rows) ok = ok && row.x_limit_error == 0;
  return {7, "Delta mediating map is not Lipschitz", ok,
          "n=1..10, limits within 2^-16: " + std::string(report.limits_identified() ? "yes" : "no") +
              ", ratio at n=10 = " + to_fraction_string(last.ratio)};
}

CriterionResult gasket_geometry() {
  bool fixed = sigma(Label::a, vertex(Terminal::T)) == vertex(Terminal::T) &&
               sigma(Label::b, vertex(Terminal::L)) == vertex(Terminal::L) &&
               sigma(Label::c, vertex(Terminal::R)) == vertex(Terminal::R) &&
               vertex(Terminal::T) == Point2{QSqrt3(Rational(1, 2)), QSqrt3(0, Rational(1, 2))} &&
               vertex(Terminal::L) == Point2{0, 0} && vertex(Terminal::R) == Point2{1, 0};
  const auto space = gasket_space();
  std::size_t round_trips = 0;
  std::size_t failures = 0;
  for (std::size_t n = 0; n <= 6; ++n) {
    for (const auto& w : all_words(n)) {
      const Point2 p = coords(w);
      ++round_trips;
      const auto [m, pre] = sigma_inv(p);
      if (!(sigma(m, pre) == p)) ++failures;
      for (Label k : kLabels) {
        const auto [k2, back] = sigma_inv(sigma(k, p));
        const auto want = glue_normalize(space, k, p);
        const auto got = glue_normalize(space, k2, back);
        ++round_trips;
        if (!(want == got)) ++failures;
      }
    }
  }
  std::size_t junctions = 0;
  std::size_t junction_failures = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& w : all_words(n)) {
      if (const auto partner = glue_partner(w)) {
        ++junctions;
        if (!(coords(w) == coords(*partner))) ++junction_failures;
      }
    }
  }
  return {8, "Gasket geometry", fixed && failures == 0 && junction_failures == 0,
          std::string("fixed points ") + (fixed ? "exact" : "wrong") + ", " +
              count_detail(round_trips, failures, "round trips") + ", " +
              count_detail(junctions, junction_failures, "junction words")};
}

Coalgebra<Point2, Surd> relabelled_gasket() {
  return {"gasket-sigma-relabelled", gasket_space(), [](const Point2& p) {
            auto [m, pre] = sigma_inv(p);
            return std::make_pair(m == Label::c ? Label::b : m, pre);
          }};
}

CriterionResult finality_square() {
  Rng rng(9);
  const auto gasket_pts = gasket_sample(rng, 100);
  std::vector<DeltaPoint> grid{DeltaPoint::apex()};
  for (long k = 0; k <= 64; ++k) grid.push_back(DeltaPoint::at(Rational(k, 64)));
  for (long k = 1; k < 60; k += 7) grid.push_back(DeltaPoint::at(Rational(k, 60)));
  const auto sigma_co = gasket_sigma();
  const auto g = finality_check(sigma_co, gasket_pts, 12);
  const auto d = finality_check(delta_coalgebra(), grid, 12);
  const auto bad = relabelled_gasket();
  const auto control = finality_check<Point2, Surd>(
      sigma_co, gasket_pts, 12, [&bad](const Point2& x, std::size_t n) { return theta(bad, x, n); });
  return {9, "Finality square commutes to 2^(1-k)", g.pass && d.pass && !control.pass,
          "gasket-sigma " + std::to_string(g.checked) + " checks, delta " + std::to_string(d.checked) +
              " checks, corrupted control " + (control.pass ? "passed (unexpected)" : "fails at " + *control.witness)};
}

CriterionResult canonical_completeness() {
  const GluingClosure closure(4);
  const auto& words = closure.words();
  std::vector<CanonicalAddress> canon;
  canon.reserve(words.size());
  for (const auto& w : words) canon.push_back(canonicalize(w));
  std::size_t failures = 0;
  std::size_t checked = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i; j < words.size(); ++j) {
      ++checked;
      if (closure.equivalent(words[i], words[j]) != (canon[i] == canon[j])) ++failures;
    }
  }
  return {10, "Canonicalization matches the gluing closure", failures == 0,
          count_detail(checked, failures, "word pairs at levels <= 4") + ", " +
              std::to_string(closure.class_count()) + " classes"};
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "metric") return Suite::metric;
  if (name == "functor") return Suite::functor;
  if (name == "counterexamples") return Suite::counterexamples;
  if (name == "all") return Suite::all;
  return std::nullopt;
}

std::vector<int> criteria_of(Suite suite) {
  switch (suite) {
    case Suite::metric: return {1, 2, 3, 10};
    case Suite::functor: return {4, 8, 9};
    case Suite::counterexamples: return {5, 6, 7};
    case Suite::all: return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  }
  return {};
}

CriterionResult run_criterion(int id) {
  static const std::function<CriterionResult()> table[] = {
      metric_oracle_equivalence, cell_diameter_bound, structure_map_isometry, uniform_cauchy, y_noncontinuity,
      i_noncontinuity,           delta_divergence,    gasket_geometry,        finality_square, canonical_completeness,
  };
  if (id < 1 || id > 10) throw std::out_of_range("no criterion " + std::to_string(id));
  try {
    return table[id - 1]();
  } catch (const std::exception& e) {
    return {id, "criterion " + std::to_string(id), false, std::string("threw: ") + e.what()};
  }
}

std::vector<CriterionResult> run_acceptance(Suite suite) {
  std::vector<CriterionResult> out;
  for (int id : criteria_of(suite)) out.push_back(run_criterion(id));
  return out;
}

std::string format_result(const CriterionResult& result) {
  std::ostringstream out;
  out << (result.pass ? "PASS" : "FAIL") << "  criterion " << result.id << ": " << result.title << " ("
      << result.detail << ")";
  return out.str();
}

}  // namespace gasket::verify
