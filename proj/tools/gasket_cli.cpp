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

#include <cstdio>
#include <iostream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "gasket/acceptance.hpp"
#include "gasket/address.hpp"
#include "gasket/builtins.hpp"
#include "gasket/geometry.hpp"
#include "gasket/metric.hpp"

namespace {

using namespace gasket;

std::string with_decimal(const Rational& value) {
  return to_fraction_string(value) + " (" + to_decimal_string(value) + ")";
}

std::string decimal(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", value);
  return buf;
}

std::string point_line(const Point2& p) {
  return p.str() + " (" + decimal(p.x.to_double()) + ", " + decimal(p.y.to_double()) + ")";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact metric and coalgebra computations on the Sierpinski gasket", "gasket"};
  app.require_subcommand(1);

  std::string word;
  auto* normalize = app.add_subcommand("normalize", "Canonical form of an address word");
  normalize->add_option("word", word, "Address word, e.g. bbb.L")->required();

  std::size_t level = 0;
  std::string w1;
  std::string w2;
  auto* dist = app.add_subcommand("dist", "Distance of two level-n words in M^n(x)I");
  dist->add_option("--level", level, "Common level of both words")->required();
  dist->add_option("w1", w1)->required();
  dist->add_option("w2", w2)->required();

  auto* gdist = app.add_subcommand("gdist", "Distance in G of two address words of any level");
  gdist->add_option("w1", w1)->required();
  gdist->add_option("w2", w2)->required();

  auto* coords_cmd = app.add_subcommand("coords", "Plane coordinates of an address word");
  coords_cmd->add_option("word", word)->required();

  std::string x_text;
  std::string y_text;
  std::size_t depth = 0;
  auto* address = app.add_subcommand("address", "Address of the point (x, y_coeff*sqrt3)");
  address->add_option("--x", x_text, "Rational x coordinate")->required();
  address->add_option("--y-coeff", y_text, "Rational coefficient of sqrt3 in y")->required();
  address->add_option("--depth", depth, "Maximum address length")->required();

  std::string coalgebra;
  std::string point;
  auto* mediate = app.add_subcommand("mediate", "theta_n of a built-in coalgebra at a point");
  mediate->add_option("--coalgebra", coalgebra)->required()->check(CLI::IsMember(coalgebra_names()));
  mediate->add_option("--point", point, "gasket: x,ycoeff or an address word; delta: apex or s")->required();
  mediate->add_option("--depth", depth)->required();

  std::string out;
  std::string format = "svg";
  auto* render_cmd = app.add_subcommand("render", "Write the level-n orbit of the vertices");
  render_cmd->add_option("--depth", depth)->required();
  render_cmd->add_option("--out", out)->required();
  render_cmd->add_option("--format", format)->check(CLI::IsMember({"svg", "points"}));

  std::string suite = "all";
  auto* verify_cmd = app.add_subcommand("verify", "Run the acceptance criteria");
  verify_cmd->add_option("--suite", suite)->check(CLI::IsMember({"metric", "functor", "counterexamples", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*normalize) {
      std::cout << canonicalize(word).str() << '\n';
    } else if (*dist) {
      std::cout << with_decimal(dist_level(AddressWord::parse(w1), AddressWord::parse(w2), level)) << '\n';
    } else if (*gdist) {
      std::cout << with_decimal(dist_G(canonicalize(w1), canonicalize(w2))) << '\n';
    } else if (*coords_cmd) {
      std::cout << point_line(coords(AddressWord::parse(word))) << '\n';
    } else if (*address) {
      const Point2 p{QSqrt3(parse_rational(x_text)), QSqrt3(0, parse_rational(y_text))};
      std::cout << address_of(p, depth).str() << '\n';
    } else if (*mediate) {
      const auto m = mediate_named(coalgebra, point, depth);
      std::cout << "address: " << m.address.str() << '\n'
                << "coords: " << point_line(m.anchor) << '\n'
                << "error_bound: " << with_decimal(m.error_bound) << '\n';
    } else if (*render_cmd) {
      const auto n = render(depth, out, format == "svg" ? RenderFormat::svg : RenderFormat::points);
      std::cout << "wrote " << n << " points to " << out << '\n';
    } else if (*verify_cmd) {
      bool ok = true;
      for (const auto& r : verify::run_acceptance(*verify::parse_suite(suite))) {
        std::cout << verify::format_result(r) << std::endl;
        ok = ok && r.pass;
      }
      return ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
