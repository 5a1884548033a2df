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

#pragma once

#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "altdist/diagram.hpp"

namespace altdist {

/// (2 + c - |s_A| - |s_B|) / 2 for a connected diagram.
int turaev_genus_diagram(const PlanarDiagram& d);

/// Genus of each connected piece; free loops are not listed.
std::vector<int> turaev_genus_by_piece(const PlanarDiagram& d);

/// |s_A| + |s_B| - c.
int state_sum_excess(const PlanarDiagram& d);

/// Unoriented 2-tangle fragment. Internal labels are non-negative; boundary
/// stub B_k is stored as label -k. Stubs B1..B4 sit counterclockwise on the
/// boundary and slots 0, 2 of each crossing form its under strand.
struct Tangle {
  std::vector<std::array<int, 4>> crossings;

  int crossing_count() const noexcept { return static_cast<int>(crossings.size()); }
  /// "X(B1,B2,B3,B4)" style text.
  std::string str() const;
  friend bool operator==(const Tangle&, const Tangle&) = default;
};

/// Parses "X(1,B1,2,B2) ..." ; each stub once, each internal label twice.
Tangle parse_tangle(std::string_view text);

/// Every internal edge joins an under slot to an over slot.
bool is_alternating_tangle(const Tangle& t);

/// Smoothing all crossings but one, with no closed loops, leaves that crossing
/// wired to the stubs in boundary order with its under strand on B1, B3.
bool tangle_extends_crossing(const Tangle& t);

/// The crossing itself: X(B1,B2,B3,B4).
Tangle identity_tangle();

/// Alternating tangle grown from the identity by n - 1 random twists next to
/// a pair of adjacent stubs.
Tangle random_alternating_tangle(int n, std::mt19937_64& rng);

/// n crossings twisted in a row next to stubs B2, B3.
Tangle twist_tangle(int n);

/// D(x, tau): crossing k replaced by tau, B_j glued to the edge at slot j-1.
/// Crossings keep their order with tau's crossings in place of k.
PlanarDiagram tangle_extend(const PlanarDiagram& d, int k, const Tangle& tau);

}  // namespace altdist
