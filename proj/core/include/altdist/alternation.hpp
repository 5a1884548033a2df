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

#include <vector>

#include "altdist/diagram.hpp"

namespace altdist {

bool is_alternating(const PlanarDiagram& d);

/// The two alternating over/under assignments of one projection piece,
/// written as the crossings of D to change. `flip` and `complement`
/// partition `crossings`; `flip` is the smaller one (ties: the one that does
/// not contain the piece's lowest crossing).
struct PieceAssignments {
  std::vector<int> crossings;
  std::vector<int> flip;
  std::vector<int> complement;
};

std::vector<PieceAssignments> alternating_assignments_by_piece(const PlanarDiagram& d);

/// Every combination of one assignment per piece: 2^(pieces) flip sets,
/// each sorted ascending. A crossingless diagram yields the empty set alone.
std::vector<std::vector<int>> alternating_assignments(const PlanarDiagram& d);

/// Sum over pieces of the smaller flip set size.
int dealternating_number_diagram(const PlanarDiagram& d);

/// Applies crossing changes at every listed index.
PlanarDiagram change_crossings(const PlanarDiagram& d, const std::vector<int>& ks);

}  // namespace altdist
