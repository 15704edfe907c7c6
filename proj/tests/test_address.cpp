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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "gasket/address.hpp"
#include "gasket/oracle.hpp"
#include "support/generators.hpp"

namespace gasket {
namespace {

AddressWord W(const char* text) { return AddressWord::parse(text); }

TEST(AddressWord, ParsesAndPrints) {
  EXPECT_EQ(W("abc.T").str(), "abc.T");
  EXPECT_EQ(W(".L").level(), 0u);
  EXPECT_EQ(W("cab.R").level(), 3u);
  for (const char* bad : {"", "abc", "ab.", ".", "ab.X", "adc.T", "ab.TL", "a.b.T"}) {
    EXPECT_THROW(W(bad), std::invalid_argument) << bad;
  }
}

TEST(GluePartner, KnownValues) {
  EXPECT_EQ(glue_partner(W("b.T")), W("a.L"));
  EXPECT_EQ(glue_partner(W("ab.L")), W("ba.T"));
  EXPECT_EQ(glue_partner(W("aa.T")), std::nullopt);
}

TEST(GluePartner, JunctionPatternsAtDepth) {
  EXPECT_EQ(glue_partner(W("cbaaa.T")), W("cabbb.L"));
  EXPECT_EQ(glue_partner(W("acc.R")), W("caa.T"));
  EXPECT_EQ(glue_partner(W("bcbb.L")), W("bbcc.R"));
  EXPECT_EQ(glue_partner(W(".R")), std::nullopt);
  EXPECT_EQ(glue_partner(W("ccc.R")), std::nullopt);
}

TEST(GluePartner, InvolutionUpToLevel6) {
  for (std::size_t level = 0; level <= 6; ++level) {
    for (const auto& w : all_words(level)) {
      const auto partner = glue_partner(w);
      if (!partner) continue;
      EXPECT_NE(*partner, w);
      EXPECT_EQ(partner->level(), w.level());
      EXPECT_EQ(glue_partner(*partner), w) << w.str();
      EXPECT_EQ(canonicalize(*partner), canonicalize(w)) << w.str();
    }
  }
}

TEST(GluePartner, OnlyCornersLackPartners) {
  for (std::size_t level = 0; level <= 5; ++level) {
    std::size_t lonely = 0;
    for (const auto& w : all_words(level)) lonely += !glue_partner(w).has_value();
    EXPECT_EQ(lonely, 3u);
  }
}

TEST(Canonicalize, KnownValues) {
  EXPECT_EQ(canonicalize(W("bbb.L")).word(), W(".L"));
  EXPECT_EQ(canonicalize(W("a.T")).word(), W(".T"));
  EXPECT_EQ(canonicalize(W("ac.T")).word(), W("aa.R"));
  EXPECT_NE(canonicalize(W("ac.T")), canonicalize(W("a.R")));
}

TEST(Canonicalize, RewritesEachJunctionSource) {
  EXPECT_EQ(canonicalize(W("b.T")).str(), "a.L");
  EXPECT_EQ(canonicalize(W("c.T")).str(), "a.R");
  EXPECT_EQ(canonicalize(W("c.L")).str(), "b.R");
  EXPECT_EQ(canonicalize(W("baaa.T")).str(), "a.L");
  EXPECT_EQ(canonicalize(W("abcbb.L")).str(), "abb.R");
}

void expect_canonical_shape(const CanonicalAddress& c) {
  const auto labels = c.word().labels();
  if (labels.empty()) return;
  const Label last = labels.back();
  const Terminal d = c.word().terminal();
  EXPECT_NE(last, pad(d)) << c.str();
  EXPECT_FALSE(d == Terminal::T && (last == Label::b || last == Label::c)) << c.str();
  EXPECT_FALSE(d == Terminal::L && last == Label::c) << c.str();
}

TEST(Canonicalize, IdempotentAndWellShapedExhaustivelyToLevel8) {
  for (std::size_t level = 0; level <= 8; ++level) {
    for (const auto& w : all_words(level)) {
      const auto c = canonicalize(w);
      EXPECT_EQ(canonicalize(c.word()), c);
      expect_canonical_shape(c);
      ASSERT_LE(c.level(), w.level());
    }
  }
}

TEST(Canonicalize, IdempotentOnRandomDeepWords) {
  std::mt19937_64 rng(2026);
  for (int i = 0; i < 2000; ++i) {
    const auto w = test::random_word(rng, 9 + i % 40);
    const auto c = canonicalize(w);
    EXPECT_EQ(canonicalize(c.word()), c);
    expect_canonical_shape(c);
  }
}

TEST(Canonicalize, MatchesBruteForceClosureToLevel3) {
  const verify::GluingClosure closure(3);
  const auto& words = closure.words();
  for (const auto& u : words) {
    for (const auto& v : words) {
      ASSERT_EQ(canonicalize(u) == canonicalize(v), closure.equivalent(u, v)) << u.str() << " " << v.str();
    }
  }
}

TEST(Embed, KnownValues) {
  EXPECT_EQ(embed(W(".T"), 2), W("aa.T"));
  EXPECT_EQ(embed(W("b.R"), 3), W("bcc.R"));
  EXPECT_EQ(embed(W("ab.L"), 2), W("ab.L"));
  EXPECT_THROW(embed(W("abc.T"), 2), std::invalid_argument);
}

TEST(Embed, PreservesCanonicalClass) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    const auto w = test::random_word(rng, i % 12);
    EXPECT_EQ(canonicalize(embed(w, w.level() + i % 7)), canonicalize(w));
  }
}

TEST(Distinguished, Levels) {
  EXPECT_EQ(distinguished(0), (std::array{W(".T"), W(".L"), W(".R")}));
  EXPECT_EQ(distinguished(1), (std::array{W("a.T"), W("b.L"), W("c.R")}));
  EXPECT_EQ(distinguished(2), (std::array{W("aa.T"), W("bb.L"), W("cc.R")}));
}

TEST(CanonicalAddresses, EnumerationMatchesExhaustiveCanonicalization) {
  for (std::size_t n = 0; n <= 6; ++n) {
    std::set<CanonicalAddress> seen;
    for (std::size_t level = 0; level <= n; ++level) {
      for (const auto& w : all_words(level)) seen.insert(canonicalize(w));
    }
    const auto listed = canonical_addresses(n);
    EXPECT_EQ(std::set<CanonicalAddress>(listed.begin(), listed.end()), seen);
    EXPECT_EQ(listed.size(), seen.size());
    std::size_t pow3 = 1;
    for (std::size_t k = 0; k <= n; ++k) pow3 *= 3;
    EXPECT_EQ(listed.size(), (pow3 + 3) / 2);
  }
  EXPECT_EQ(canonical_addresses(2).size(), 15u);
}

TEST(Prepend, IsTheInitialAlgebraStructureMap) {
  EXPECT_EQ(prepend(Label::a, CanonicalAddress::corner(Terminal::T)).str(), ".T");
  EXPECT_EQ(prepend(Label::b, CanonicalAddress::corner(Terminal::T)).str(), "a.L");
  EXPECT_EQ(prepend(Label::c, canonicalize(W("a.L"))).str(), "ca.L");
}

}  // namespace
}  // namespace gasket
