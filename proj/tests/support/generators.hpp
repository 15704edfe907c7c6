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

#include <random>
#include <vector>

#include "gasket/address.hpp"
#include "gasket/rational.hpp"

namespace gasket::test {

inline Label random_label(std::mt19937_64& rng) {
  return kLabels[std::uniform_int_distribution<int>(0, 2)(rng)];
}

inline Terminal random_terminal(std::mt19937_64& rng) {
  return kTerminals[std::uniform_int_distribution<int>(0, 2)(rng)];
}

inline std::vector<Label> random_labels(std::mt19937_64& rng, std::size_t level) {
  std::vector<Label> labels(level);
  for (auto& m : labels) m = random_label(rng);
  return labels;
}

inline AddressWord random_word(std::mt19937_64& rng, std::size_t level) {
  return AddressWord(random_labels(rng, level), random_terminal(rng));
}

inline CanonicalAddress random_canonical(std::mt19937_64& rng, std::size_t max_level) {
  const auto level = std::uniform_int_distribution<std::size_t>(0, max_level)(rng);
  return canonicalize(random_word(rng, level));
}

/// Rational in [0, 1] with a denominator drawn from a mix of dyadic and odd values.
inline Rational random_unit_rational(std::mt19937_64& rng) {
  static constexpr long dens[] = {2, 3, 4, 5, 7, 8, 12, 16, 64, 81, 97, 1024, 4096, 999983};
  const long den = dens[std::uniform_int_distribution<std::size_t>(0, std::size(dens) - 1)(rng)];
  const long num = std::uniform_int_distribution<long>(0, den)(rng);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace gasket::test
