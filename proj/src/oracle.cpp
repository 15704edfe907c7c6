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

#include "gasket/oracle.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>

namespace gasket::verify {

namespace {

// The distinguished points of M^n (x) I, read straight off the definition:
// T = a (x) T, L = b (x) L, R = c (x) R, iterated n times.
AddressWord definitional_corner(Terminal d, std::size_t level) {
  static constexpr Label home[3] = {Label::a, Label::b, Label::c};
  return AddressWord(std::vector<Label>(level, home[index(d)]), d);
}

// The generating relations of M (x) X as (label, corner) pairs.
constexpr std::pair<std::pair<Label, Terminal>, std::pair<Label, Terminal>> kGluing[] = {
    {{Label::b, Terminal::T}, {Label::a, Terminal::L}},
    {{Label::a, Terminal::R}, {Label::c, Terminal::T}},
    {{Label::c, Terminal::L}, {Label::b, Terminal::R}},
};

AddressWord with_head(Label m, const AddressWord& tail) { return tail.prepend(m); }

}  // namespace

QuotientOracle::QuotientOracle(std::size_t max_level) {
  if (max_level > kOracleMaxLevel) {
    throw ResourceGuardError("dist_oracle: level " + std::to_string(max_level) + " exceeds the oracle guard of " +
                             std::to_string(kOracleMaxLevel));
  }
  for (std::size_t level = 0; level <= max_level; ++level) tables_.push_back(build_level(level));
}

QuotientOracle::Table QuotientOracle::build_level(std::size_t level) const {
  Table t;
  t.words = all_words(level);
  for (std::size_t i = 0; i < t.words.size(); ++i) t.index.emplace(t.words[i], i);
  const std::size_t n = t.words.size();
  t.matrix.assign(n * n, Dist(0));

  if (level == 0) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) t.matrix[i * n + j] = (i == j) ? Dist(0) : Dist(1);
    }
    return t;
  }

  const Table& below = tables_.at(level - 1);
  std::vector<std::size_t> tail(n);
  for (std::size_t i = 0; i < n; ++i) tail[i] = below.index.at(t.words[i].drop_front(1));

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const bool same_copy = t.words[i].labels()[0] == t.words[j].labels()[0];
      t.matrix[i * n + j] = same_copy ? Dist(below.at(tail[i], tail[j]) / 2) : Dist(1);
    }
  }
  for (const auto& [lhs, rhs] : kGluing) {
    const auto i = t.index.at(with_head(lhs.first, definitional_corner(lhs.second, level - 1)));
    const auto j = t.index.at(with_head(rhs.first, definitional_corner(rhs.second, level - 1)));
    t.matrix[i * n + j] = 0;
    t.matrix[j * n + i] = 0;
  }

  // Floyd-Warshall. Legs of length >= 1 never beat the unit cross-copy edge.
  const Dist one(1);
  Dist candidate;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      const Dist& dik = t.matrix[i * n + k];
      if (dik >= one) continue;
      for (std::size_t j = 0; j < n; ++j) {
        candidate = dik + t.matrix[k * n + j];
        if (candidate < t.matrix[i * n + j]) t.matrix[i * n + j] = candidate;
      }
    }
  }
  return t;
}

Dist QuotientOracle::distance(const AddressWord& u, const AddressWord& v) const {
  if (u.level() != v.level()) throw std::invalid_argument("QuotientOracle: words at different levels");
  if (u.level() > max_level()) {
    throw std::invalid_argument("QuotientOracle: level " + std::to_string(u.level()) + " was not built");
  }
  const Table& t = tables_[u.level()];
  return t.at(t.index.at(u), t.index.at(v));
}

Dist dist_oracle(const AddressWord& u, const AddressWord& v, std::size_t level) {
  if (level > kOracleMaxLevel) {
    throw ResourceGuardError("dist_oracle: level " + std::to_string(level) + " exceeds the oracle guard of " +
                             std::to_string(kOracleMaxLevel));
  }
  if (u.level() != level || v.level() != level) {
    throw std::invalid_argument("dist_oracle: words " + u.str() + " and " + v.str() + " are not at level " +
                                std::to_string(level));
  }
  static std::mutex mutex;
  static std::shared_ptr<const QuotientOracle> shared;
  std::shared_ptr<const QuotientOracle> oracle;
  {
    std::lock_guard lock(mutex);
    if (!shared || shared->max_level() < level) shared = std::make_shared<const QuotientOracle>(level);
    oracle = shared;
  }
  return oracle->distance(u, v);
}

GluingClosure::GluingClosure(std::size_t max_level) {
  for (std::size_t level = 0; level <= max_level; ++level) {
    for (auto& w : all_words(level)) {
      index_.emplace(w, words_.size());
      words_.push_back(std::move(w));
    }
  }
  parent_.resize(words_.size());
  for (std::size_t i = 0; i < parent_.size(); ++i) parent_[i] = i;

  // Chain maps: M^n (x) ! replaces the terminal d by the level-1 word !(d).
  for (const auto& w : words_) {
    if (w.level() == max_level) continue;
    const AddressWord bang = definitional_corner(w.terminal(), 1);
    std::vector<Label> labels(w.labels().begin(), w.labels().end());
    labels.push_back(bang.labels()[0]);
    unite(id(w), id(AddressWord(std::move(labels), bang.terminal())));
  }

  // Gluing at level n: the top relations between corners of M^(n-1) (x) I,
  // plus every level n-1 relation under a common first label.
  std::vector<std::pair<AddressWord, AddressWord>> relations;
  for (std::size_t level = 1; level <= max_level; ++level) {
    std::vector<std::pair<AddressWord, AddressWord>> next;
    for (const auto& [lhs, rhs] : kGluing) {
      next.emplace_back(with_head(lhs.first, definitional_corner(lhs.second, level - 1)),
                        with_head(rhs.first, definitional_corner(rhs.second, level - 1)));
    }
    for (const auto& [x, y] : relations) {
      for (Label m : kLabels) next.emplace_back(with_head(m, x), with_head(m, y));
    }
    for (const auto& [x, y] : next) unite(id(x), id(y));
    relations = std::move(next);
  }
  for (std::size_t i = 0; i < parent_.size(); ++i) parent_[i] = find(i);
}

std::size_t GluingClosure::id(const AddressWord& w) const {
  const auto it = index_.find(w);
  if (it == index_.end()) throw std::invalid_argument("GluingClosure: word " + w.str() + " is beyond the closure");
  return it->second;
}

std::size_t GluingClosure::find(std::size_t i) const {
  while (parent_[i] != i) i = parent_[i];
  return i;
}

void GluingClosure::unite(std::size_t i, std::size_t j) {
  i = find(i);
  j = find(j);
  if (i != j) parent_[std::max(i, j)] = std::min(i, j);
}

bool GluingClosure::equivalent(const AddressWord& u, const AddressWord& v) const { return find(id(u)) == find(id(v)); }

std::size_t GluingClosure::class_count() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < parent_.size(); ++i) count += (find(i) == i);
  return count;
}

}  // namespace gasket::verify
