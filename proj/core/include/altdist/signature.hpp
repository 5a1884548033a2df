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

#include <cstdint>
#include <vector>

#include "altdist/diagram.hpp"
#include "altdist/rational.hpp"

namespace altdist {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Goeritz form on the white regions of a checkerboard shading, with the
/// first white region dropped, and the Gordon-Litherland correction term.
struct GoeritzForm {
  IntMatrix matrix;
  int correction = 0;
  /// Face indices of the white regions, the dropped one first.
  std::vector<int> white_faces;
};

/// White is the colour class of the largest face (the one drawn unbounded);
/// `swap_colours` shades the other class instead.
GoeritzForm goeritz_form(const PlanarDiagram& d, bool swap_colours = false);

/// Signature of a symmetric integer matrix by exact congruence
/// diagonalization over the rationals.
int matrix_signature(const IntMatrix& m);

/// sign(G) - correction, normalized so the positive trefoil has signature -2.
/// Either shading gives the same value.
int goeritz_signature(const PlanarDiagram& d, bool swap_colours = false);

/// Gordon-Litherland-Murasugi recursion for sigma(T(p,q)), p, q >= 1.
int torus_signature_recursive(int p, int q);

/// Closed form for sigma(T(p, np + r)) with 0 < r < p, n >= 0.
int torus_signature_closed(int p, int n, int r);

/// pq - p - q + 1 for coprime p, q >= 1.
int torus_s_invariant(int p, int q);

struct ModifiedTorusBounds {
  ClosedInterval sigma_torus;
  ClosedInterval sigma_modified;
  ClosedInterval s_modified;
};

/// Bounds on sigma(T(p,q)), sigma and s of the modified torus link, for
/// coprime p, q >= 3.
ModifiedTorusBounds modified_torus_bounds(int p, int q);

}  // namespace altdist
