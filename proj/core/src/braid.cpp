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

#include "altdist/braid.hpp"

#include <cstdlib>
#include <numeric>
#include <optional>

#include "altdist/builder.hpp"
#include "altdist/error.hpp"

namespace altdist {

void BraidWord::validate() const {
  if (strands < 2) throw Error(Errc::invalid_parameter, "braid needs at least 2 strands");
  for (int l : letters)
    if (l == 0 || std::abs(l) >= strands)
      throw Error(Errc::invalid_parameter,
                  "braid letter " + std::to_string(l) + " outside 1.." + std::to_string(strands - 1));
}

std::vector<int> strand_permutation(const BraidWord& w) {
  w.validate();
  // at[p] = strand currently at position p.
  std::vector<int> at(w.strands);
  std::iota(at.begin(), at.end(), 0);
  for (int l : w.letters) {
    int i = std::abs(l) - 1;
    std::swap(at[i], at[i + 1]);
  }
  std::vector<int> perm(w.strands);
  for (int p = 0; p < w.strands; ++p) perm[at[p]] = p;
  return perm;
}

PlanarDiagram braid_closure(const BraidWord& w) {
  w.validate();
  enum { SW, SE, NE, NW };
  DiagramBuilder b;
  std::vector<std::optional<Dart>> first_in(w.strands), last_out(w.strands);
  for (int l : w.letters) {
    int i = std::abs(l) - 1;
    int x = b.add_crossing();
    // Raw slot of each corner; under strand is the slot 0 -> 2 pair.
    std::array<int, 4> slot_of{};
    if (l > 0) {
      slot_of[SE] = 0, slot_of[NE] = 1, slot_of[NW] = 2, slot_of[SW] = 3;
    } else {
      slot_of[SW] = 0, slot_of[SE] = 1, slot_of[NE] = 2, slot_of[NW] = 3;
    }
    auto enter = [&](int pos, int corner) {
      Dart d{x, slot_of[corner]};
      if (last_out[pos]) {
        b.connect(*last_out[pos], d);
      } else {
        first_in[pos] = d;
      }
    };
    enter(i, SW);
    enter(i + 1, SE);
    last_out[i] = Dart{x, slot_of[NW]};
    last_out[i + 1] = Dart{x, slot_of[NE]};
  }
  for (int p = 0; p < w.strands; ++p) {
    if (last_out[p]) {
      b.connect(*last_out[p], *first_in[p]);
    } else {
      b.add_free_loops(1);
    }
  }
  return b.build();
}

}  // namespace altdist
