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
#include "altdist/laurent.hpp"
#include "altdist/rational.hpp"

namespace altdist {

enum class Resolution { A, B };

/// Resolution choice per crossing, indexed like the diagram's crossings.
using StateAssignment = std::vector<Resolution>;

StateAssignment all_a_state(const PlanarDiagram& d);
StateAssignment all_b_state(const PlanarDiagram& d);

/// Loops left after resolving every crossing; each free loop counts once.
/// The A-smoothing joins slots 0-1 and 2-3, the B-smoothing 0-3 and 1-2.
int state_loop_count(const PlanarDiagram& d, const StateAssignment& s);

struct BracketConfig {
  int crossing_cap = 20;
  /// State enumeration is split into this many chunks run on threads.
  int threads = 1;
};

/// Kauffman bracket, normalized so the one-loop diagram gives 1.
LaurentPolynomial kauffman_bracket(const PlanarDiagram& d, const BracketConfig& cfg = {});

/// V(t) = (-A^3)^(-w) <D> with t = A^(-4).
LaurentPolynomial jones_polynomial(const PlanarDiagram& d, const BracketConfig& cfg = {});

/// Bracket-to-Jones normalization, for callers that already hold <D>.
LaurentPolynomial jones_from_bracket(const LaurentPolynomial& bracket, int writhe);

Rational jones_span(const PlanarDiagram& d, const BracketConfig& cfg = {});

}  // namespace altdist
