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

#include "gasket/builtins.hpp"

#include <stdexcept>

namespace gasket {

std::vector<std::string> algebra_names() { return {"gasket-tau", "Y", "I-e"}; }

std::vector<std::string> coalgebra_names() { return {"gasket-sigma", "delta"}; }

void validate_builtins() {
  validate(initial_space());
  validate(y_space());
  validate(gasket_space());
  validate(delta_space());
  validate(gasket_tau());
  validate(y_algebra());
  validate(i_algebra());
  validate(gasket_sigma());
  validate(delta_coalgebra());
  if (!delta_cases_agree()) throw std::invalid_argument("delta: overlapping cases disagree");
}

Point2 parse_gasket_point(std::string_view text) {
  if (text.find('.') != std::string_view::npos) return coords(AddressWord::parse(text));
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) {
    throw std::invalid_argument("gasket point must be 'x,ycoeff' or an address word, got '" + std::string(text) + "'");
  }
  return {QSqrt3(parse_rational(text.substr(0, comma))), QSqrt3(0, parse_rational(text.substr(comma + 1)))};
}

DeltaPoint parse_delta_point(std::string_view text) {
  if (text == "apex") return DeltaPoint::apex();
  return DeltaPoint::at(parse_rational(text));
}

Mediation mediate_named(std::string_view coalgebra, std::string_view point, std::size_t depth) {
  if (depth == 0) throw std::invalid_argument("depth must be at least 1");
  Mediation out;
  if (coalgebra == "gasket-sigma") {
    out.address = theta(gasket_sigma(), parse_gasket_point(point), depth);
  } else if (coalgebra == "delta") {
    out.address = theta(delta_coalgebra(), parse_delta_point(point), depth);
  } else {
    throw std::invalid_argument("unknown coalgebra '" + std::string(coalgebra) + "'");
  }
  out.anchor = coords(out.address);
  out.error_bound = pow2(-static_cast<long>(depth));
  return out;
}

}  // namespace gasket
