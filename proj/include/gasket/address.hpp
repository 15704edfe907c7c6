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
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gasket {

/// Copy labels of M = {a, b, c}: a is the top cell, b the left, c the right.
enum class Label : std::uint8_t { a = 0, b = 1, c = 2 };

/// Points of the initial object I = {T, L, R}.
enum class Terminal : std::uint8_t { T = 0, L = 1, R = 2 };

inline constexpr std::array<Label, 3> kLabels{Label::a, Label::b, Label::c};
inline constexpr std::array<Terminal, 3> kTerminals{Terminal::T, Terminal::L, Terminal::R};

/// The label whose copy carries the distinguished point `d` of M (x) X:
/// T = a (x) T, L = b (x) L, R = c (x) R.
constexpr Label pad(Terminal d) { return static_cast<Label>(static_cast<std::uint8_t>(d)); }

/// Inverse of pad: the vertex a label's cell contributes as a distinguished point.
constexpr Terminal anchor(Label m) { return static_cast<Terminal>(static_cast<std::uint8_t>(m)); }

constexpr std::size_t index(Label m) { return static_cast<std::size_t>(m); }
constexpr std::size_t index(Terminal d) { return static_cast<std::size_t>(d); }

char to_char(Label m);
char to_char(Terminal d);
std::optional<Label> label_from_char(char ch);
std::optional<Terminal> terminal_from_char(char ch);

/// The corner of copy `m` that is glued to copy `other` (m != other).
/// {a,b}: a-side L, b-side T. {a,c}: a-side R, c-side T. {b,c}: b-side R, c-side L.
Terminal touching_corner(Label m, Label other);

/// If (m, d) is one side of a gluing relation, the other side.
std::optional<std::pair<Label, Terminal>> glued_with(Label m, Terminal d);

/// A finite word m1 ... mn . d naming an element of M^n (x) I.
/// Text format: labels then '.' then the terminal, e.g. "abc.T" or ".L".
class AddressWord {
 public:
  AddressWord() = default;
  AddressWord(std::vector<Label> labels, Terminal terminal)
      : labels_(std::move(labels)), terminal_(terminal) {}
  explicit AddressWord(Terminal terminal) : terminal_(terminal) {}

  /// Throws std::invalid_argument on malformed text.
  static AddressWord parse(std::string_view text);

  std::size_t level() const { return labels_.size(); }
  std::span<const Label> labels() const { return labels_; }
  Terminal terminal() const { return terminal_; }
  std::string str() const;

  AddressWord prepend(Label m) const;
  /// The word with its first `count` labels removed.
  AddressWord drop_front(std::size_t count) const;

  friend bool operator==(const AddressWord&, const AddressWord&) = default;
  friend auto operator<=>(const AddressWord&, const AddressWord&) = default;

 private:
  std::vector<Label> labels_;
  Terminal terminal_ = Terminal::T;
};

/// Reduced AddressWord: the unique representative of its element of G.
/// Carries no chain padding and never ends in (b,T), (c,T) or (c,L).
class CanonicalAddress {
 public:
  /// ".T"
  CanonicalAddress() = default;

  const AddressWord& word() const { return word_; }
  std::size_t level() const { return word_.level(); }
  std::string str() const { return word_.str(); }

  /// The distinguished points T_G, L_G, R_G.
  static CanonicalAddress corner(Terminal d) { return CanonicalAddress(AddressWord(d)); }

  friend bool operator==(const CanonicalAddress&, const CanonicalAddress&) = default;
  friend auto operator<=>(const CanonicalAddress&, const CanonicalAddress&) = default;

 private:
  explicit CanonicalAddress(AddressWord w) : word_(std::move(w)) {}
  friend CanonicalAddress canonicalize(const AddressWord& w);

  AddressWord word_;
};

/// The other same-level word denoting the same point of M^n (x) I, if any.
/// Only the three corner words a^n.T, b^n.L, c^n.R have no partner.
std::optional<AddressWord> glue_partner(const AddressWord& w);

CanonicalAddress canonicalize(const AddressWord& w);
inline CanonicalAddress canonicalize(std::string_view text) { return canonicalize(AddressWord::parse(text)); }

/// Image of `w` under the initial-chain maps up to `target_level`; appends
/// pad(terminal). Throws std::invalid_argument if target_level < level(w).
AddressWord embed(const AddressWord& w, std::size_t target_level);

/// (a^n.T, b^n.L, c^n.R), indexed by Terminal.
std::array<AddressWord, 3> distinguished(std::size_t level);

/// The structure map g of the initial algebra: g(m (x) [u]) = [m u].
CanonicalAddress prepend(Label m, const CanonicalAddress& u);

/// All 3^(n+1) words of level n, in lexicographic order.
std::vector<AddressWord> all_words(std::size_t level);

/// Every element of G representable at level <= max_level, each exactly once,
/// in order of increasing level. There are (3^(n+1) + 3) / 2 of them.
std::vector<CanonicalAddress> canonical_addresses(std::size_t max_level);

inline std::ostream& operator<<(std::ostream& out, const AddressWord& w) { return out << w.str(); }
inline std::ostream& operator<<(std::ostream& out, const CanonicalAddress& c) { return out << c.str(); }

}  // namespace gasket

template <>
struct std::hash<gasket::AddressWord> {
  std::size_t operator()(const gasket::AddressWord& w) const noexcept;
};

template <>
struct std::hash<gasket::CanonicalAddress> {
  std::size_t operator()(const gasket::CanonicalAddress& c) const noexcept {
    return std::hash<gasket::AddressWord>{}(c.word());
  }
};
