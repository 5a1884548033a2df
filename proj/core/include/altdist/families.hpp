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

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "altdist/braid.hpp"
#include "altdist/diagram.hpp"
#include "altdist/rational.hpp"

namespace altdist {

/// (sigma_1 ... sigma_{p-1})^q.
BraidWord torus_braid(int p, int q);

/// (sigma_1 ... sigma_{p-1})^(q-1) followed by sigma_1 sigma_2^-1 sigma_3 ...
BraidWord modified_torus_braid(int p, int q);

/// Positions where the two words carry letters of opposite sign; the words
/// must agree up to sign letter by letter.
std::vector<int> letter_sign_flips(const BraidWord& a, const BraidWord& b);

/// Hypotheses p even, q odd, q != 1 mod p, together with the strand parity
/// argument checked on the braid word itself.
bool toroidal_alternating_check(int p, int q);

/// Positive-clasped t-twisted Whitehead double of a knot diagram: the
/// blackboard parallel with |t - writhe| compensating full twists and a clasp
/// on edge 0. Crossing count 4c + 2 + 2|t - w|.
PlanarDiagram whitehead_double(const PlanarDiagram& d, int t);

/// Standard pretzel diagram with one vertical twist column per entry.
/// Entries of one sign give an alternating diagram.
PlanarDiagram pretzel_diagram(const std::vector<int>& twists);

enum class FamilyTag { torus, modified_torus, whitehead };

std::string_view to_string(FamilyTag f) noexcept;
/// "torus", "modified", "modified_torus", "whitehead".
FamilyTag parse_family(std::string_view name);

enum class Quantity {
  alt,
  dalt,
  turaev_genus,
  alt_genus,
  warp,
  crossing_number,
  jones_span,
  s_invariant,
  signature,
  hfk_width,
};

std::string_view to_string(Quantity q) noexcept;

/// A published value or interval. Upper is +infinity when empty.
struct CitedBound {
  Rational lower;
  ExtendedRational upper;
  std::string citation;

  bool exact() const { return upper && *upper == lower; }
  friend bool operator==(const CitedBound&, const CitedBound&) = default;
};

struct FamilyFacts {
  FamilyTag family = FamilyTag::torus;
  std::vector<int> params;
  std::map<Quantity, CitedBound> values;

  const CitedBound* find(Quantity q) const {
    auto it = values.find(q);
    return it == values.end() ? nullptr : &it->second;
  }
};

/// Cited values. Ranges: torus (3, q) with q > 3 prime to 3; modified torus
/// (p, q) coprime with p, q >= 3; whitehead (n) with n >= 1.
FamilyFacts known_values(FamilyTag family, const std::vector<int>& params);

}  // namespace altdist
