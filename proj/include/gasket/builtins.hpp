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
#include <string>
#include <string_view>
#include <vector>

#include "gasket/address.hpp"
#include "gasket/counterexamples.hpp"
#include "gasket/geometry.hpp"

namespace gasket {

/// "gasket-tau", "Y", "I-e".
std::vector<std::string> algebra_names();
/// "gasket-sigma", "delta".
std::vector<std::string> coalgebra_names();

/// Runs the validation of every built-in space, algebra and coalgebra.
/// Throws std::invalid_argument on the first failure.
void validate_builtins();

/// "x,ycoeff" for the point (x, ycoeff*sqrt3), or an address word such as "ba.R".
Point2 parse_gasket_point(std::string_view text);
/// "apex" or a rational s in [0, 1].
DeltaPoint parse_delta_point(std::string_view text);

struct Mediation {
  CanonicalAddress address;  // theta_depth
  Point2 anchor;             // coords of the address
  Rational error_bound;      // 2^-depth
};

/// theta_depth of a named coalgebra at a point given as text. Throws
/// std::invalid_argument for an unknown name, malformed point or depth 0.
Mediation mediate_named(std::string_view coalgebra, std::string_view point, std::size_t depth);

}  // namespace gasket
