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

#include "gasket/address.hpp"

#include <stdexcept>

namespace gasket {

char to_char(Label m) { return "abc"[index(m)]; }
char to_char(Terminal d) { return "TLR"[index(d)]; }

std::optional<Label> label_from_char(char ch) {
  switch (ch) {
    case 'a': return Label::a;
    case 'b': return Label::b;
    case 'c': return Label::c;
    default: return std::nullopt;
  }
}

std::optional<Terminal> terminal_from_char(char ch) {
  switch (ch) {
    case 'T': return Terminal::T;
    case 'L': return Terminal::L;
    case 'R': return Terminal::R;
    default: return std::nullopt;
  }
}

Terminal touching_corner(Label m, Label other) {
  if (m == other) throw std::invalid_argument("touching_corner: labels must differ");
  switch (m) {
    case Label::a: return other == Label::b ? Terminal::L : Terminal::R;
    case Label::b: return other == Label::a ? Terminal::T : Terminal::R;
    case Label::c: return other == Label::a ? Terminal::T : Terminal::L;
  }
  return Terminal::T;
}

std::optional<std::pair<Label, Terminal>> glued_with(Label m, Terminal d) {
  if (m == pad(d)) return std::nullopt;
  // (m, d) sits on the corner of copy m touching copy `other`
  for (Label other : kLabels) {
    if (other != m && touching_corner(m, other) == d) return std::pair{other, touching_corner(other, m)};
  }
  return std::nullopt;
}

AddressWord AddressWord::parse(std::string_view text) {
  const auto dot = text.find('.');
  if (dot == std::string_view::npos || dot + 2 != text.size()) {
    throw std::invalid_argument("malformed address word '" + std::string(text) + "': expected <labels>.<T|L|R>");
  }
  std::vector<Label> labels;
  labels.reserve(dot);
  for (char ch : text.substr(0, dot)) {
    const auto m = label_from_char(ch);
    if (!m) throw std::invalid_argument("malformed address word '" + std::string(text) + "': bad label '" + ch + "'");
    labels.push_back(*m);
  }
  const auto d = terminal_from_char(text[dot + 1]);
  if (!d) throw std::invalid_argument("malformed address word '" + std::string(text) + "': bad terminal");
  return AddressWord(std::move(labels), *d);
}

std::string AddressWord::str() const {
  std::string out;
  out.reserve(labels_.size() + 2);
  for (Label m : labels_) out.push_back(to_char(m));
  out.push_back('.');
  out.push_back(to_char(terminal_));
  return out;
}

AddressWord AddressWord::prepend(Label m) const {
  std::vector<Label> labels;
  labels.reserve(labels_.size() + 1);
  labels.push_back(m);
  labels.insert(labels.end(), labels_.begin(), labels_.end());
  return AddressWord(std::move(labels), terminal_);
}

AddressWord AddressWord::drop_front(std::size_t count) const {
  if (count > labels_.size()) throw std::invalid_argument("drop_front past the end of the word");
  return AddressWord(std::vector<Label>(labels_.begin() + static_cast<std::ptrdiff_t>(count), labels_.end()),
                     terminal_);
}

std::optional<AddressWord> glue_partner(const AddressWord& w) {
  const auto labels = w.labels();
  const Label filler = pad(w.terminal());
  std::size_t run = 0;
  while (run < labels.size() && labels[labels.size() - 1 - run] == filler) ++run;
  if (run == labels.size()) return std::nullopt;

  const std::size_t pos = labels.size() - 1 - run;
  const auto other = glued_with(labels[pos], w.terminal());
  if (!other) return std::nullopt;

  std::vector<Label> out(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(pos));
  out.push_back(other->first);
  out.insert(out.end(), run, pad(other->second));
  return AddressWord(std::move(out), other->second);
}

namespace {

void strip_padding(std::vector<Label>& labels, Terminal d) {
  while (!labels.empty() && labels.back() == pad(d)) labels.pop_back();
}

}  // namespace

CanonicalAddress canonicalize(const AddressWord& w) {
  std::vector<Label> labels(w.labels().begin(), w.labels().end());
  Terminal d = w.terminal();
  strip_padding(labels, d);
  if (!labels.empty()) {
    const Label m = labels.back();
    // rewrite sources (b,T), (c,T), (c,L) -> (a,L), (a,R), (b,R)
    if ((d == Terminal::T && m != Label::a) || (d == Terminal::L && m == Label::c)) {
      const auto other = glued_with(m, d);
      labels.back() = other->first;
      d = other->second;
    }
  }
  strip_padding(labels, d);
  return CanonicalAddress(AddressWord(std::move(labels), d));
}

AddressWord embed(const AddressWord& w, std::size_t target_level) {
  if (target_level < w.level()) {
    throw std::invalid_argument("embed: target level " + std::to_string(target_level) + " is below the word level " +
                                std::to_string(w.level()));
  }
  std::vector<Label> labels(w.labels().begin(), w.labels().end());
  labels.insert(labels.end(), target_level - w.level(), pad(w.terminal()));
  return AddressWord(std::move(labels), w.terminal());
}

std::array<AddressWord, 3> distinguished(std::size_t level) {
  return {AddressWord(std::vector<Label>(level, Label::a), Terminal::T),
          AddressWord(std::vector<Label>(level, Label::b), Terminal::L),
          AddressWord(std::vector<Label>(level, Label::c), Terminal::R)};
}

CanonicalAddress prepend(Label m, const CanonicalAddress& u) { return canonicalize(u.word().prepend(m)); }

std::vector<AddressWord> all_words(std::size_t level) {
  std::vector<AddressWord> out;
  std::vector<Label> labels(level, Label::a);
  while (true) {
    for (Terminal d : kTerminals) out.emplace_back(labels, d);
    std::size_t i = level;
    while (i > 0 && labels[i - 1] == Label::c) labels[--i] = Label::a;
    if (i == 0) break;
    labels[i - 1] = static_cast<Label>(index(labels[i - 1]) + 1);
  }
  return out;
}

std::vector<CanonicalAddress> canonical_addresses(std::size_t max_level) {
  std::vector<CanonicalAddress> out;
  for (Terminal d : kTerminals) out.push_back(CanonicalAddress::corner(d));
  static constexpr std::pair<Label, Terminal> tails[] = {
      {Label::a, Terminal::L}, {Label::a, Terminal::R}, {Label::b, Terminal::R}};
  for (std::size_t level = 1; level <= max_level; ++level) {
    for (const auto& prefix : all_words(level - 1)) {
      if (prefix.terminal() != Terminal::T) continue;  // one copy of each label prefix
      for (const auto& [m, d] : tails) {
        std::vector<Label> labels(prefix.labels().begin(), prefix.labels().end());
        labels.push_back(m);
        out.push_back(canonicalize(AddressWord(std::move(labels), d)));
      }
    }
  }
  return out;
}

}  // namespace gasket

std::size_t std::hash<gasket::AddressWord>::operator()(const gasket::AddressWord& w) const noexcept {
  std::size_t h = 1469598103934665603ULL ^ gasket::index(w.terminal());
  for (gasket::Label m : w.labels()) h = (h ^ (gasket::index(m) + 1)) * 1099511628211ULL;
  return h ^ (w.level() << 1);
}
