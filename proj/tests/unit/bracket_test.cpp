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

#include <map>

#include "altdist/bracket.hpp"
#include "altdist/braid.hpp"
#include "altdist/error.hpp"
#include "altdist/families.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace altdist;

namespace {

LaurentPolynomial from_exponents(const oracle::Poly& p, int scale, Variable v) {
  LaurentPolynomial out(v);
  for (const auto& [e, c] : p) out.add_term(scale * e, c);
  return out;
}

}  // namespace

TEST(Bracket, Examples) {
  EXPECT_EQ(kauffman_bracket(PlanarDiagram::unknot()), LaurentPolynomial::constant(1, Variable::A));
  LaurentPolynomial two(Variable::A);
  two.add_term(8, -1);
  two.add_term(-8, -1);
  EXPECT_EQ(kauffman_bracket(PlanarDiagram::unlink(2)), two);
  const PlanarDiagram t = braid_closure({2, {1, 1, 1}});
  EXPECT_EQ(kauffman_bracket(t), from_exponents(oracle::bracket(t), 4, Variable::A));
}

TEST(Bracket, CapExceeded) {
  BracketConfig cfg;
  cfg.crossing_cap = 7;
  try {
    kauffman_bracket(braid_closure(torus_braid(3, 4)), cfg);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::cap_exceeded);
  }
}

TEST(Bracket, ChunkingDoesNotChangeResult) {
  const PlanarDiagram d = pretzel_diagram({5, -3, 2});
  const LaurentPolynomial one = kauffman_bracket(d);
  for (int threads : {2, 3, 8}) {
    BracketConfig cfg;
    cfg.threads = threads;
    EXPECT_EQ(kauffman_bracket(d, cfg), one) << threads;
  }
}

TEST(Jones, Examples) {
  EXPECT_EQ(jones_polynomial(braid_closure(torus_braid(3, 4))).str(), "t^3 + t^5 - t^8");
  EXPECT_EQ(jones_polynomial(braid_closure(torus_braid(3, 5))).str(), "t^4 + t^6 - t^10");
  EXPECT_EQ(jones_polynomial(PlanarDiagram::unknot()), LaurentPolynomial::constant(1, Variable::t));
  EXPECT_NE(jones_polynomial(braid_closure({2, {1, 1, 1}})), LaurentPolynomial::constant(1, Variable::t));
}

TEST(Jones, HalfIntegerExponentsForTwoComponents) {
  const LaurentPolynomial v = jones_polynomial(braid_closure({2, {1, 1}}));
  for (const auto& [k, c] : v.terms()) EXPECT_EQ(k % 4 != 0, true) << v.str();
  EXPECT_NE(v.str().find("^("), std::string::npos);
}

TEST(Jones, AgreesWithNaiveEnumeration) {
  int checked = 0;
  for (const auto& nd : testing_corpus::load()) {
    if (nd.diagram.crossing_count() > 8) continue;
    EXPECT_EQ(jones_polynomial(nd.diagram), from_exponents(oracle::jones_quarters(nd.diagram), 1, Variable::t))
        << nd.name;
    ++checked;
  }
  EXPECT_GT(checked, 30);
}

TEST(Jones, FromBracketMatches) {
  const PlanarDiagram d = braid_closure({3, {1, -2, 1, 1, -2}});
  EXPECT_EQ(jones_from_bracket(kauffman_bracket(d), writhe(d)), jones_polynomial(d));
}

TEST(JonesSpan, Examples) {
  EXPECT_EQ(jones_span(braid_closure(torus_braid(3, 4))), Rational(5));
  EXPECT_EQ(jones_span(braid_closure(torus_braid(3, 5))), Rational(6));
  EXPECT_EQ(jones_span(PlanarDiagram::unknot()), Rational(0));
}

TEST(JonesSpan, BoundedByCrossingsOnConnectedDiagrams) {
  for (const auto& nd : testing_corpus::load()) {
    if (!nd.diagram.is_connected()) continue;
    const Rational s = jones_span(nd.diagram);
    EXPECT_LE(s, Rational(nd.diagram.crossing_count())) << nd.name;
  }
  // Reduced alternating diagrams reach the bound.
  for (const BraidWord& w : {BraidWord{2, {1, 1, 1}}, BraidWord{3, {1, -2, 1, -2}}, BraidWord{2, {1, 1, 1, 1, 1, 1, 1}},
                             BraidWord{3, {1, -2, 1, -2, 1, -2}}})
    EXPECT_EQ(jones_span(braid_closure(w)), Rational(static_cast<int>(w.letters.size())));
}

TEST(Jones, InvariantAcrossCorpusDiagramsOfOneLink) {
  std::map<std::string, LaurentPolynomial> seen;
  int pairs = 0;
  for (const auto& nd : testing_corpus::load()) {
    const LaurentPolynomial v = jones_polynomial(nd.diagram);
    auto [it, fresh] = seen.emplace(testing_corpus::link_of(nd.name), v);
    if (!fresh) {
      EXPECT_EQ(it->second, v) << nd.name;
      ++pairs;
    }
  }
  EXPECT_GE(pairs, 10);
}

TEST(StateLoops, Examples) {
  const PlanarDiagram t = braid_closure({2, {1, 1, 1}});
  EXPECT_EQ(state_loop_count(t, all_a_state(t)), 2);
  EXPECT_EQ(state_loop_count(t, all_b_state(t)), 3);
  EXPECT_EQ(state_loop_count(PlanarDiagram::unknot(), {}), 1);
  EXPECT_THROW(state_loop_count(t, {Resolution::A}), Error);
}

TEST(StateLoops, AgreeWithOracle) {
  for (const auto& nd : testing_corpus::load()) {
    const PlanarDiagram& d = nd.diagram;
    const int c = d.crossing_count();
    if (c > 9) continue;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c); mask += 1 + (mask % 3)) {
      StateAssignment s(c);
      for (int k = 0; k < c; ++k) s[k] = (mask >> k & 1) ? Resolution::B : Resolution::A;
      ASSERT_EQ(state_loop_count(d, s), oracle::loop_count(d, mask)) << nd.name << " mask " << mask;
    }
  }
}
