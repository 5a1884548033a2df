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

#include "altdist/warping.hpp"

#include <algorithm>

#include "altdist/error.hpp"

namespace altdist {

WeightedTraversal edge_weights(const PlanarDiagram& d, int component, int base, bool reversed) {
  if (component < 0 || component >= d.component_count())
    throw Error(Errc::index_out_of_range, "component index out of range");
  if (component >= static_cast<int>(d.components().size()))
    throw Error(Errc::invalid_parameter, "weights are undefined on a crossingless component");
  const auto& cycle = d.components()[component];
  auto at = std::find(cycle.begin(), cycle.end(), base);
  if (at == cycle.end())
    throw Error(Errc::index_out_of_range, "base edge is not on the component");

  const int n = static_cast<int>(cycle.size());
  const int start = static_cast<int>(at - cycle.begin());
  WeightedTraversal out;
  out.component = component;
  int weight = 0;
  for (int i = 0; i < n; ++i) {
    int e = cycle[((reversed ? start - i : start + i) % n + n) % n];
    out.edges.push_back(e);
    out.weights.push_back(weight);
    // The crossing passed on the way to the next edge.
    Dart through = reversed ? d.tail(e) : d.head(e);
    weight += through.slot % 2 == 1 ? 1 : -1;
  }
  return out;
}

Rational traversal_warp(const WeightedTraversal& w) {
  if (w.weights.empty()) return Rational(0);
  auto [lo, hi] = std::minmax_element(w.weights.begin(), w.weights.end());
  if (*hi == *lo) return Rational(0);
  return Rational(*hi - *lo - 1, 2);
}

Rational component_warp(const PlanarDiagram& d, int component) {
  const auto& cycle = d.components().at(component);
  int net = 0;
  for (int e : cycle) net += d.head(e).slot % 2 == 1 ? 1 : -1;
  // Balanced weights close up, so every base and direction gives the same span.
  if (net == 0) return traversal_warp(edge_weights(d, component, cycle.front()));
  Rational best(0);
  for (int e : cycle)
    for (bool rev : {false, true}) best = std::max(best, traversal_warp(edge_weights(d, component, e, rev)));
  return best;
}

Rational warping_span_diagram(const PlanarDiagram& d) {
  Rational best(0);
  for (int k = 0; k < static_cast<int>(d.components().size()); ++k)
    best = std::max(best, component_warp(d, k));
  return best;
}

Rational warping_polynomial_span(const PlanarDiagram& d) {
  return Rational(2) * warping_span_diagram(d) + Rational(1);
}

}  // namespace altdist
