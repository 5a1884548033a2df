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

#include "altdist/alternation.hpp"

#include <algorithm>
#include <queue>

#include "altdist/error.hpp"

namespace altdist {

bool is_alternating(const PlanarDiagram& d) {
  // An edge alternates iff it joins an under slot (even) to an over slot (odd).
  for (int e = 0; e < 2 * d.crossing_count(); ++e)
    if ((d.head(e).slot + d.tail(e).slot) % 2 == 0) return false;
  return true;
}

std::vector<PieceAssignments> alternating_assignments_by_piece(const PlanarDiagram& d) {
  const int c = d.crossing_count();
  std::vector<int> flip(c, -1);
  std::vector<PieceAssignments> out;
  for (const auto& piece : d.pieces()) {
    // Two-colour the crossings: flip[x] ^ flip[y] must make each edge odd.
    std::queue<int> todo;
    flip[piece.front()] = 0;
    todo.push(piece.front());
    while (!todo.empty()) {
      int x = todo.front();
      todo.pop();
      for (int s = 0; s < 4; ++s) {
        Dart other = d.across(Dart{x, s});
        int want = flip[x] ^ ((s + other.slot + 1) & 1);
        if (flip[other.crossing] < 0) {
          flip[other.crossing] = want;
          todo.push(other.crossing);
        } else if (flip[other.crossing] != want) {
          throw Error(Errc::non_planar, "projection admits no alternating assignment");
        }
      }
    }
    PieceAssignments pa;
    pa.crossings = piece;
    std::vector<int> zero, one;
    for (int x : piece) (flip[x] ? one : zero).push_back(x);
    if (one.size() <= zero.size()) {
      pa.flip = std::move(one);
      pa.complement = std::move(zero);
    } else {
      pa.flip = std::move(zero);
      pa.complement = std::move(one);
    }
    out.push_back(std::move(pa));
  }
  return out;
}

std::vector<std::vector<int>> alternating_assignments(const PlanarDiagram& d) {
  std::vector<std::vector<int>> out{{}};
  for (const auto& pa : alternating_assignments_by_piece(d)) {
    std::vector<std::vector<int>> next;
    for (const auto& partial : out)
      for (const auto* choice : {&pa.flip, &pa.complement}) {
        auto merged = partial;
        merged.insert(merged.end(), choice->begin(), choice->end());
        std::sort(merged.begin(), merged.end());
        next.push_back(std::move(merged));
      }
    out = std::move(next);
  }
  return out;
}

int dealternating_number_diagram(const PlanarDiagram& d) {
  int total = 0;
  for (const auto& pa : alternating_assignments_by_piece(d))
    total += static_cast<int>(pa.flip.size());
  return total;
}

PlanarDiagram change_crossings(const PlanarDiagram& d, const std::vector<int>& ks) {
  PlanarDiagram out = d;
  for (int k : ks) out = crossing_change(out, k);
  return out;
}

}  // namespace altdist
