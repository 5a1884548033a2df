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
#include "altdist/rational.hpp"

namespace altdist {

/// Edge weights along one component. Passing along the over strand of a
/// crossing adds 1 to the weight, passing under subtracts 1.
struct WeightedTraversal {
  int component = 0;
  std::vector<int> edges;
  std::vector<int> weights;
};

/// Weights starting from d = 0 on `base`, following the component's
/// orientation or its reverse. `component` indexes PlanarDiagram::components();
/// indices past those name free loops and raise invalid_parameter.
WeightedTraversal edge_weights(const PlanarDiagram& d, int component, int base,
                               bool reversed = false);

/// (max d - min d - 1) / 2 of one traversal; 0 for fewer than two weights.
Rational traversal_warp(const WeightedTraversal& w);

/// w_k of a component: the largest traversal_warp over all base edges and
/// both orientations. For knots every choice agrees.
Rational component_warp(const PlanarDiagram& d, int component);

/// Maximum of w_k over components; crossingless components contribute 0.
Rational warping_span_diagram(const PlanarDiagram& d);

/// 2 warp + 1, the span of the warping polynomial for a nontrivial diagram.
Rational warping_polynomial_span(const PlanarDiagram& d);

}  // namespace altdist
