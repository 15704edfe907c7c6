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

#include "gasket/space.hpp"

#include <fstream>
#include <memory>
#include <sstream>
#include <unordered_map>

namespace gasket {

InitialSpace initial_space() {
  return InitialSpace(
      "I", [](Terminal x, Terminal y) { return x == y ? Rational(0) : Rational(1); },
      {Terminal::T, Terminal::L, Terminal::R}, std::vector<Terminal>(kTerminals.begin(), kTerminals.end()));
}

namespace {

std::array<CanonicalAddress, 3> address_corners() {
  return {CanonicalAddress::corner(Terminal::T), CanonicalAddress::corner(Terminal::L),
          CanonicalAddress::corner(Terminal::R)};
}

std::vector<std::string> split_words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

}  // namespace

AddressSpace address_space() {
  return AddressSpace("G", [](const CanonicalAddress& u, const CanonicalAddress& v) { return dist_G(u, v); },
                      address_corners());
}

AddressSpace approximant_space(std::size_t level) {
  return AddressSpace(
      "M^" + std::to_string(level) + "(x)I", [](const CanonicalAddress& u, const CanonicalAddress& v) { return dist_G(u, v); },
      address_corners(), canonical_addresses(level));
}

FiniteSpace parse_finite_space(std::string_view text, std::string name) {
  const auto bad = [&](const std::string& what) { throw std::invalid_argument(name + ": " + what); };
  std::vector<std::string> points;
  std::vector<std::string> corners;
  std::vector<std::vector<Rational>> rows;
  bool in_matrix = false;

  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    if (line.rfind("points:", 0) == 0) {
      points = split_words(line.substr(7));
      in_matrix = false;
    } else if (line.rfind("distinguished:", 0) == 0) {
      corners = split_words(line.substr(14));
      in_matrix = false;
    } else if (line.rfind("matrix:", 0) == 0) {
      in_matrix = true;
    } else if (in_matrix) {
      std::vector<Rational> row;
      for (const auto& cell : split_words(line)) row.push_back(parse_rational(cell));
      rows.push_back(std::move(row));
    } else {
      bad("unexpected line '" + line + "'");
    }
  }

  if (points.empty()) bad("no points");
  if (corners.size() != 3) bad("need exactly three distinguished points");
  if (rows.size() != points.size()) bad("matrix has " + std::to_string(rows.size()) + " rows");
  auto index_of = std::make_shared<std::unordered_map<std::string, std::size_t>>();
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!index_of->emplace(points[i], i).second) bad("duplicate point " + points[i]);
    if (rows[i].size() != points.size()) bad("row " + points[i] + " has the wrong length");
  }
  std::array<std::string, 3> corner_names;
  for (std::size_t k = 0; k < 3; ++k) {
    if (!index_of->contains(corners[k])) bad("unknown distinguished point " + corners[k]);
    corner_names[k] = corners[k];
  }

  auto matrix = std::make_shared<const std::vector<std::vector<Rational>>>(std::move(rows));
  auto metric = [index_of, matrix](const std::string& x, const std::string& y) {
    return (*matrix).at(index_of->at(x)).at(index_of->at(y));
  };
  FiniteSpace space(std::move(name), metric, corner_names, points);
  validate(space);
  return space;
}

FiniteSpace load_finite_space(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_finite_space(buf.str(), path.stem().string());
}

}  // namespace gasket
