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

#include <numeric>

#include "altdist/braid.hpp"
#include "altdist/error.hpp"
#include "altdist/families.hpp"
#include "altdist/signature.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace altdist;

TEST(GoeritzSignature, Examples) {
  EXPECT_EQ(goeritz_signature(braid_closure({2, {1, 1, 1}})), -2);
  for (int q = 3; q <= 9; q += 2)
    EXPECT_EQ(goeritz_signature(braid_closure(torus_braid(2, q))), 1 - q) << q;
  EXPECT_EQ(goeritz_signature(braid_closure({3, {1, -2, 1, -2}})), 0);
  EXPECT_EQ(goeritz_signature(braid_closure({2, {-1, -1, -1}})), 2);
}

TEST(GoeritzSignature, ShadingIndependentAndLinkInvariant) {
  std::map<std::string, int> seen;
  for (const auto& nd : testing_corpus::load()) {
    if (!nd.diagram.is_connected()) continue;
    const int s = goeritz_signature(nd.diagram);
    EXPECT_EQ(goeritz_signature(nd.diagram, true), s) << nd.name;
    auto [it, fresh] = seen.emplace(testing_corpus::link_of(nd.name), s);
    if (!fresh) {
      EXPECT_EQ(it->second, s) << nd.name;
    }
  }
}

TEST(GoeritzForm, SymmetricAndEigenAgrees) {
  for (const auto& nd : testing_corpus::load()) {
    if (!nd.diagram.is_connected()) continue;
    for (bool swap : {false, true}) {
      const GoeritzForm g = goeritz_form(nd.diagram, swap);
      const std::size_t n = g.matrix.size();
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) ASSERT_EQ(g.matrix[i][j], g.matrix[j][i]) << nd.name;
      EXPECT_EQ(matrix_signature(g.matrix), oracle::eigen_signature(g.matrix)) << nd.name;
    }
  }
}

TEST(MatrixSignature, ZeroDiagonalAndDegenerate) {
  EXPECT_EQ(matrix_signature({{0, 1}, {1, 0}}), 0);
  EXPECT_EQ(matrix_signature({{0, 1, 0}, {1, 0, 0}, {0, 0, 3}}), 1);
  EXPECT_EQ(matrix_signature({{1, 1}, {1, 1}}), 1);
  EXPECT_EQ(matrix_signature({}), 0);
  EXPECT_EQ(matrix_signature({{-2, 1, 0}, {1, -2, 1}, {0, 1, -2}}), -3);
}

TEST(TorusSignature, Examples) {
  EXPECT_EQ(torus_signature_recursive(3, 6), -8);
  EXPECT_EQ(torus_signature_recursive(2, 7), -6);
  EXPECT_EQ(torus_signature_recursive(3, 4), -6);
  EXPECT_EQ(torus_signature_closed(3, 0, 2), -2);
  EXPECT_EQ(torus_signature_closed(3, 2, 1), -8);
  EXPECT_EQ(torus_signature_closed(4, 1, 3), -14);
  EXPECT_THROW(torus_signature_closed(3, 1, 3), Error);
}

TEST(TorusSignature, GoeritzMatchesRecursion) {
  for (int p = 2; p <= 7; ++p)
    for (int q = p + 1; q <= 7; ++q) {
      if (std::gcd(p, q) != 1) continue;
      EXPECT_EQ(goeritz_signature(braid_closure(torus_braid(p, q))), torus_signature_recursive(p, q))
          << p << "," << q;
    }
}

TEST(TorusSignature, ClosedMatchesRecursion) {
  for (int p = 2; p <= 8; ++p)
    for (int n = 0; n <= 4; ++n)
      for (int r = 1; r < p; ++r)
        EXPECT_EQ(torus_signature_closed(p, n, r), torus_signature_recursive(p, n * p + r))
            << p << " " << n << " " << r;
}

TEST(TorusSInvariant, Examples) {
  EXPECT_EQ(torus_s_invariant(3, 4), 6);
  EXPECT_EQ(torus_s_invariant(2, 3), 2);
  for (int p = 1; p <= 6; ++p) EXPECT_EQ(torus_s_invariant(p, 1), 0);
  EXPECT_THROW(torus_s_invariant(2, 4), Error);
}

TEST(ModifiedTorusBounds, Examples) {
  const auto b47 = modified_torus_bounds(4, 7);
  EXPECT_EQ(b47.s_modified.lo, Rational(15));
  EXPECT_EQ(b47.s_modified.hi, Rational(18));
  // The lower end is -6 - 14; the upper end works out to 9 - 21/2.
  EXPECT_EQ(b47.sigma_modified.lo, Rational(-20));
  EXPECT_EQ(b47.sigma_modified.hi, Rational(-3, 2));
  const auto b34 = modified_torus_bounds(3, 4);
  EXPECT_EQ(b34.sigma_torus.lo, Rational(-8));
  EXPECT_EQ(b34.sigma_torus.hi, Rational(-2));
  EXPECT_TRUE(b34.sigma_torus.contains(Rational(torus_signature_recursive(3, 4))));
  EXPECT_THROW(modified_torus_bounds(3, 6), Error);
  EXPECT_THROW(modified_torus_bounds(2, 5), Error);
}

TEST(ModifiedTorusBounds, ComputedSignaturesInside) {
  for (int p = 3; p <= 7; ++p)
    for (int q = 3; q <= 7; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const auto b = modified_torus_bounds(p, q);
      EXPECT_TRUE(b.sigma_modified.contains(Rational(goeritz_signature(braid_closure(modified_torus_braid(p, q))))))
          << p << "," << q;
      EXPECT_TRUE(b.sigma_torus.contains(Rational(torus_signature_recursive(p, q)))) << p << "," << q;
    }
}

TEST(GoeritzSignature, CrossingChangeMonotone) {
  int pairs = 0;
  for (const auto& nd : testing_corpus::load()) {
    const PlanarDiagram& d = nd.diagram;
    if (d.component_count() != 1 || !d.is_connected()) continue;
    for (int k = 0; k < d.crossing_count(); ++k) {
      if (d.crossings()[k].sign < 0) continue;
      const PlanarDiagram minus = crossing_change(d, k);
      if (!minus.is_connected()) continue;
      const int sp = goeritz_signature(d), sm = goeritz_signature(minus);
      EXPECT_LE(sm - 2, sp) << nd.name << " " << k;
      EXPECT_LE(sp, sm) << nd.name << " " << k;
      ++pairs;
    }
  }
  EXPECT_GT(pairs, 50);
}

TEST(GoeritzSignature, PositiveBraidsNegative) {
  for (const BraidWord& w :
       {BraidWord{2, {1, 1, 1}}, torus_braid(3, 4), torus_braid(3, 5), BraidWord{3, {1, 1, 1, 2, 1, 2}},
        torus_braid(4, 3), torus_braid(2, 9)}) {
    const PlanarDiagram d = braid_closure(w);
    ASSERT_EQ(d.component_count(), 1);
    EXPECT_LT(goeritz_signature(d), 0);
  }
}
