// Copyright 2026 The altdist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cstdlib>
#include <numeric>

#include "altdist/bracket.hpp"
#include "altdist/braid.hpp"
#include "altdist/error.hpp"
#include "altdist/families.hpp"

using namespace altdist;

TEST(TorusBraid, Examples) {
  EXPECT_EQ(torus_braid(3, 4), (BraidWord{3, {1, 2, 1, 2, 1, 2, 1, 2}}));
  EXPECT_EQ(torus_braid(2, 3), (BraidWord{2, {1, 1, 1}}));
  EXPECT_EQ(braid_closure(torus_braid(4, 2)).component_count(), 2);
  EXPECT_THROW(torus_braid(1, 3), Error);
}

TEST(ModifiedTorusBraid, Examples) {
  EXPECT_EQ(modified_torus_braid(4, 3), (BraidWord{4, {1, 2, 3, 1, 2, 3, 1, -2, 3}}));
  for (int q = 3; q <= 8; ++q)
    EXPECT_EQ(letter_sign_flips(torus_braid(3, q), modified_torus_braid(3, q)).size(), 1u);
  EXPECT_EQ(letter_sign_flips(torus_braid(5, 3), modified_torus_braid(5, 3)).size(), 2u);
  EXPECT_THROW(modified_torus_braid(2, 5), Error);
}

TEST(ModifiedTorusBraid, FlipCountFormula) {
  for (int p = 3; p <= 9; ++p)
    for (int q = 3; q <= 9; ++q) {
      const BraidWord t = torus_braid(p, q), m = modified_torus_braid(p, q);
      const auto flips = letter_sign_flips(t, m);
      EXPECT_EQ(static_cast<int>(flips.size()), (p - 1) / 2);
      // Flipping exactly those crossings turns the closure into the other.
      PlanarDiagram d = braid_closure(t);
      for (int k : flips) d = crossing_change(d, k);
      EXPECT_EQ(d, braid_closure(m));
    }
}

TEST(ToroidalCheck, Examples) {
  EXPECT_TRUE(toroidal_alternating_check(4, 7));
  EXPECT_TRUE(toroidal_alternating_check(4, 3));
  EXPECT_FALSE(toroidal_alternating_check(4, 5));
  EXPECT_FALSE(toroidal_alternating_check(3, 4));
  EXPECT_FALSE(toroidal_alternating_check(4, 6));
  EXPECT_FALSE(toroidal_alternating_check(6, 7));
  EXPECT_TRUE(toroidal_alternating_check(4, 11));
  EXPECT_FALSE(toroidal_alternating_check(6, 13));
}

TEST(WhiteheadDouble, Examples) {
  const PlanarDiagram u = PlanarDiagram::unknot();
  EXPECT_EQ(whitehead_double(u, 1).crossing_count(), 4);
  const PlanarDiagram t = braid_closure({2, {1, 1, 1}});
  EXPECT_EQ(whitehead_double(t, 0).crossing_count(), 20);
  const PlanarDiagram w0 = whitehead_double(u, 0);
  EXPECT_EQ(w0.crossing_count(), 2);
  EXPECT_EQ(jones_polynomial(w0), LaurentPolynomial::constant(1, Variable::t));
  try {
    whitehead_double(braid_closure({2, {1, 1}}), 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_a_knot);
  }
}

TEST(WhiteheadDouble, CountFormulaAndOneComponent) {
  for (const BraidWord& w : {BraidWord{2, {1, 1, 1}}, BraidWord{3, {1, -2, 1, -2}}, BraidWord{2, {-1, -1, -1}}})
    for (int t = -3; t <= 3; ++t) {
      const PlanarDiagram d = braid_closure(w);
      const PlanarDiagram wd = whitehead_double(d, t);
      EXPECT_EQ(wd.crossing_count(), 4 * d.crossing_count() + 2 + 2 * std::abs(t - writhe(d)));
      EXPECT_EQ(wd.component_count(), 1);
    }
}

TEST(WhiteheadDouble, TwistedUnknotDoublesAreTwistKnots) {
  const PlanarDiagram u = PlanarDiagram::unknot();
  EXPECT_EQ(jones_polynomial(whitehead_double(u, -1)), jones_polynomial(braid_closure({2, {1, 1, 1}})));
  EXPECT_EQ(jones_polynomial(whitehead_double(u, 1)), jones_polynomial(braid_closure({3, {1, -2, 1, -2}})));
  EXPECT_EQ(jones_polynomial(whitehead_double(u, -2)), jones_polynomial(braid_closure({3, {1, 1, 1, 2, -1, 2}})));
}

TEST(Pretzel, Basic) {
  const PlanarDiagram p = pretzel_diagram({5, -3, 2});
  EXPECT_EQ(p.crossing_count(), 10);
  EXPECT_EQ(p.component_count(), 1);
  EXPECT_EQ(pretzel_diagram({3, 3, 3}).crossing_count(), 9);
  EXPECT_EQ(jones_polynomial(pretzel_diagram({3, -2, 3})), jones_polynomial(braid_closure(torus_braid(3, 4))));
  EXPECT_THROW(pretzel_diagram({}), Error);
  EXPECT_THROW(pretzel_diagram({3, 0}), Error);
}

TEST(KnownValues, Torus) {
  const FamilyFacts f7 = known_values(FamilyTag::torus, {3, 7});
  auto value = [&](const FamilyFacts& f, Quantity q) {
    const CitedBound* b = f.find(q);
    EXPECT_NE(b, nullptr);
    EXPECT_FALSE(b->citation.empty());
    return b ? b->lower : Rational(-1);
  };
  EXPECT_EQ(value(f7, Quantity::alt), Rational(2));
  EXPECT_EQ(value(f7, Quantity::dalt), Rational(2));
  EXPECT_EQ(value(f7, Quantity::turaev_genus), Rational(2));
  EXPECT_EQ(value(f7, Quantity::crossing_number), Rational(14));
  EXPECT_EQ(value(f7, Quantity::jones_span), Rational(8));
  EXPECT_EQ(value(f7, Quantity::warp), Rational(1, 2));
  const FamilyFacts f4 = known_values(FamilyTag::torus, {3, 4});
  EXPECT_EQ(value(f4, Quantity::alt), Rational(1));
  EXPECT_EQ(value(f4, Quantity::dalt), Rational(1));
  EXPECT_EQ(value(f4, Quantity::crossing_number) - value(f4, Quantity::jones_span), Rational(3));
  const CitedBound* a10 = known_values(FamilyTag::torus, {3, 10}).find(Quantity::alt);
  ASSERT_NE(a10, nullptr);
  EXPECT_EQ(a10->lower, Rational(2));
  EXPECT_EQ(a10->upper, Rational(3));
}

TEST(KnownValues, SpanMatchesComputed) {
  for (int q : {4, 5, 7, 8}) {
    const FamilyFacts f = known_values(FamilyTag::torus, {3, q});
    EXPECT_EQ(jones_span(braid_closure(torus_braid(3, q))), f.find(Quantity::jones_span)->lower);
    EXPECT_EQ(f.find(Quantity::crossing_number)->lower - Rational(q - 1), Rational(q + 1));
  }
}

TEST(KnownValues, Whitehead) {
  const FamilyFacts w = known_values(FamilyTag::whitehead, {3});
  EXPECT_EQ(w.find(Quantity::alt)->lower, Rational(1));
  EXPECT_TRUE(w.find(Quantity::alt)->exact());
  EXPECT_EQ(w.find(Quantity::turaev_genus)->lower, Rational(3));
  EXPECT_FALSE(w.find(Quantity::turaev_genus)->upper);
  EXPECT_EQ(w.find(Quantity::alt_genus)->lower, Rational(2));
  EXPECT_EQ(w.find(Quantity::hfk_width)->lower, Rational(4));
}

TEST(KnownValues, RangesEnforced) {
  auto code = [](FamilyTag f, std::vector<int> p) {
    try {
      known_values(f, p);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::empty_input;
  };
  EXPECT_EQ(code(FamilyTag::torus, {3, 3}), Errc::invalid_parameter);
  EXPECT_EQ(code(FamilyTag::torus, {3, 6}), Errc::invalid_parameter);
  EXPECT_EQ(code(FamilyTag::torus, {2, 5}), Errc::invalid_parameter);
  EXPECT_EQ(code(FamilyTag::torus, {3}), Errc::invalid_parameter);
  EXPECT_EQ(code(FamilyTag::modified_torus, {4, 6}), Errc::invalid_parameter);
  EXPECT_EQ(code(FamilyTag::whitehead, {0}), Errc::invalid_parameter);
  try {
    parse_family("hyperbolic");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::unsupported_family);
  }
  EXPECT_EQ(parse_family("modified"), FamilyTag::modified_torus);
}

TEST(KnownValues, IntervalsNonempty) {
  std::vector<FamilyFacts> all;
  for (int q : {4, 5, 7, 8, 10, 11, 13}) all.push_back(known_values(FamilyTag::torus, {3, q}));
  for (int n = 1; n <= 6; ++n) all.push_back(known_values(FamilyTag::whitehead, {n}));
  for (int p = 3; p <= 7; ++p)
    for (int q = 3; q <= 7; ++q)
      if (std::gcd(p, q) == 1) all.push_back(known_values(FamilyTag::modified_torus, {p, q}));
  for (const auto& f : all)
    for (const auto& [q, b] : f.values) {
      EXPECT_FALSE(b.citation.empty());
      if (b.upper) {
        EXPECT_LE(b.lower, *b.upper);
      }
    }
}
