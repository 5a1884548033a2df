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

#include <algorithm>
#include <cstdlib>
#include <random>

#include "altdist/alternation.hpp"
#include "altdist/braid.hpp"
#include "altdist/families.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace altdist;

TEST(IsAlternating, Examples) {
  EXPECT_TRUE(is_alternating(braid_closure({2, {1, 1, 1}})));
  EXPECT_FALSE(is_alternating(pretzel_diagram({5, -3, 2})));
  EXPECT_TRUE(is_alternating(PlanarDiagram::unknot()));
  EXPECT_TRUE(is_alternating(PlanarDiagram::unlink(3)));
}

TEST(IsAlternating, AgreesWithStrandWalk) {
  for (const auto& nd : testing_corpus::load())
    EXPECT_EQ(is_alternating(nd.diagram), oracle::alternating(nd.diagram)) << nd.name;
}

TEST(AlternatingAssignments, Examples) {
  const auto t = alternating_assignments(braid_closure({2, {1, 1, 1}}));
  ASSERT_EQ(t.size(), 2u);
  EXPECT_TRUE(std::find(t.begin(), t.end(), std::vector<int>{}) != t.end());
  EXPECT_TRUE(std::find(t.begin(), t.end(), std::vector<int>{0, 1, 2}) != t.end());

  const auto p = alternating_assignments_by_piece(pretzel_diagram({5, -3, 2}));
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p[0].flip.size(), 3u);
  EXPECT_EQ(p[0].complement.size(), 7u);

  const auto u = alternating_assignments(PlanarDiagram::unknot());
  ASSERT_EQ(u.size(), 1u);
  EXPECT_TRUE(u[0].empty());
}

TEST(AlternatingAssignments, TwoPerPieceAndPartition) {
  for (const auto& nd : testing_corpus::load()) {
    const PlanarDiagram& d = nd.diagram;
    const auto pieces = alternating_assignments_by_piece(d);
    EXPECT_EQ(pieces.size(), d.pieces().size()) << nd.name;
    EXPECT_EQ(alternating_assignments(d).size(), std::size_t{1} << pieces.size()) << nd.name;
    for (const auto& p : pieces) {
      std::vector<int> all = p.flip;
      all.insert(all.end(), p.complement.begin(), p.complement.end());
      std::sort(all.begin(), all.end());
      EXPECT_EQ(all, p.crossings) << nd.name;
      EXPECT_LE(p.flip.size(), p.complement.size());
    }
    for (const auto& flips : alternating_assignments(d))
      EXPECT_TRUE(oracle::alternating(change_crossings(d, flips))) << nd.name;
  }
}

TEST(DealternatingNumber, Examples) {
  const PlanarDiagram p = pretzel_diagram({5, -3, 2});
  EXPECT_EQ(dealternating_number_diagram(p), 3);
  const auto pieces = alternating_assignments_by_piece(p);
  EXPECT_TRUE(is_alternating(change_crossings(p, pieces[0].flip)));
  EXPECT_EQ(dealternating_number_diagram(braid_closure({2, {1, 1, 1}})), 0);
  const PlanarDiagram t34 = braid_closure({3, {1, 2, 1, 2, 1, 2, 1, 2}});
  const int d = dealternating_number_diagram(t34);
  EXPECT_EQ(d, oracle::brute_force_dalt(t34));
  EXPECT_GE(d, 1);
}

TEST(DealternatingNumber, MatchesExhaustiveSearch) {
  for (const auto& nd : testing_corpus::load()) {
    const int d = dealternating_number_diagram(nd.diagram);
    EXPECT_EQ(d, oracle::brute_force_dalt(nd.diagram)) << nd.name;
    EXPECT_EQ(d == 0, is_alternating(nd.diagram)) << nd.name;
  }
}

TEST(DealternatingNumber, CrossingChangeMovesByAtMostOne) {
  std::mt19937_64 rng(3);
  for (const auto& nd : testing_corpus::load()) {
    const int d0 = dealternating_number_diagram(nd.diagram);
    for (int k = 0; k < nd.diagram.crossing_count(); ++k)
      EXPECT_LE(std::abs(dealternating_number_diagram(crossing_change(nd.diagram, k)) - d0), 1) << nd.name;
  }
}
