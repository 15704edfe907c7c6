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
#include <unordered_map>
#include <vector>

#include "gasket/address.hpp"
#include "gasket/metric.hpp"

namespace gasket::verify {

inline constexpr std::size_t kOracleMaxLevel = 5;

/// Brute-force quotient metric on M^n (x) I, independent of the closed-form
/// recursion in metric.hpp.
///
/// Level n is built from level n-1: the nodes are all 3^(n+1) words, the
/// edges carry the product metric on M x (M^(n-1) (x) I) (half the level n-1
/// distance inside one copy, 1 across copies), the three top-level gluing
/// pairs get zero-weight edges, and Floyd-Warshall closes the graph. Level 0
/// is the discrete metric on {T, L, R}. Every value is an exact Rational.
class QuotientOracle {
 public:
  /// Throws ResourceGuardError for max_level > kOracleMaxLevel.
  explicit QuotientOracle(std::size_t max_level);

  std::size_t max_level() const { return tables_.size() - 1; }
  Dist distance(const AddressWord& u, const AddressWord& v) const;
  const std::vector<AddressWord>& words(std::size_t level) const { return tables_.at(level).words; }

 private:
  struct Table {
    std::vector<AddressWord> words;
    std::unordered_map<AddressWord, std::size_t> index;
    std::vector<Dist> matrix;  // row-major, words.size()^2
    Dist at(std::size_t i, std::size_t j) const { return matrix[i * words.size() + j]; }
  };
  Table build_level(std::size_t level) const;

  std::vector<Table> tables_;
};

/// dist_oracle(u, v, n): shared, lazily grown QuotientOracle. Safe to call
/// concurrently. Throws ResourceGuardError for n > kOracleMaxLevel and
/// std::invalid_argument when the words are not at level n.
Dist dist_oracle(const AddressWord& u, const AddressWord& v, std::size_t level);

/// Equivalence closure of the initial-chain relation (w ~ image of w under
/// M^n (x) !) and the gluing relations applied under every common prefix, on
/// all words of level <= max_level. Union-find over explicit relation pairs.
class GluingClosure {
 public:
  explicit GluingClosure(std::size_t max_level);

  bool equivalent(const AddressWord& u, const AddressWord& v) const;
  std::size_t class_count() const;
  const std::vector<AddressWord>& words() const { return words_; }

 private:
  std::size_t find(std::size_t i) const;
  void unite(std::size_t i, std::size_t j);
  std::size_t id(const AddressWord& w) const;

  std::vector<AddressWord> words_;
  std::unordered_map<AddressWord, std::size_t> index_;
  std::vector<std::size_t> parent_;
};

}  // namespace gasket::verify
