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

#include "altdist/builder.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "altdist/error.hpp"

namespace altdist {

int DiagramBuilder::add_crossing() {
  raw_.push_back({-1, -1, -1, -1});
  return static_cast<int>(raw_.size()) - 1;
}

void DiagramBuilder::set_slot(Dart d, int label) {
  if (d.crossing < 0 || d.crossing >= static_cast<int>(raw_.size()) || d.slot < 0 || d.slot > 3)
    throw Error(Errc::index_out_of_range, "dart out of range");
  raw_[d.crossing][d.slot] = label;
  next_label_ = std::max(next_label_, label + 1);
}

int DiagramBuilder::connect(Dart from, Dart to) {
  int label = fresh_label();
  set_slot(from, label);
  set_slot(to, label);
  hint_head(label, to);
  return label;
}

void DiagramBuilder::hint_head(int label, Dart d) { hints_.emplace(label, Hint{d, true}); }
void DiagramBuilder::hint_tail(int label, Dart d) { hints_.emplace(label, Hint{d, false}); }

PlanarDiagram DiagramBuilder::build(Hints mode) const {
  const int c = static_cast<int>(raw_.size());
  std::map<int, std::vector<Dart>> ends;
  for (int x = 0; x < c; ++x)
    for (int s = 0; s < 4; ++s) {
      if (raw_[x][s] < 0) throw Error(Errc::malformed_token, "crossing slot left unfilled");
      ends[raw_[x][s]].push_back(Dart{x, s});
    }
  // Overused labels first: a mistyped label shows up as one edge used three
  // times and another used once, and the former is the useful message.
  for (bool over : {true, false})
    for (const auto& [label, ds] : ends)
      if (over ? ds.size() > 2 : ds.size() != 2)
        throw Error(Errc::edge_multiplicity, "edge " + std::to_string(label + 1) + " appears " +
                                                 std::to_string(ds.size()) + " times");

  auto other_end = [&](int label, Dart d) {
    const auto& ds = ends.at(label);
    return ds[0] == d ? ds[1] : ds[0];
  };

  std::map<int, Dart> head;
  std::set<int> seen;
  for (const auto& [first, unused] : ends) {
    if (seen.count(first)) continue;
    // Walk the component once in an arbitrary direction.
    std::vector<std::pair<int, Dart>> walk;
    int label = first;
    Dart arrive = ends.at(first)[1];
    while (!seen.count(label)) {
      seen.insert(label);
      walk.emplace_back(label, arrive);
      Dart leave{arrive.crossing, (arrive.slot + 2) % 4};
      label = raw_[leave.crossing][leave.slot];
      arrive = other_end(label, leave);
    }

    std::optional<bool> forward;
    for (const auto& [l, a] : walk) {
      auto [lo, hi] = hints_.equal_range(l);
      for (auto it = lo; it != hi; ++it) {
        bool agrees = (it->second.dart == a) == it->second.head;
        if (!forward) {
          forward = agrees;
        } else if (*forward != agrees && mode == Hints::strict) {
          throw Error(Errc::inconsistent_orientation,
                      "orientation of edge " + std::to_string(l) + " conflicts with its component");
        }
      }
    }
    if (!forward) {
      // Label-successor rule, starting from the lowest label.
      auto low = std::min_element(walk.begin(), walk.end());
      std::size_t i = static_cast<std::size_t>(low - walk.begin());
      int next = walk[(i + 1) % walk.size()].first;
      int prev = walk[(i + walk.size() - 1) % walk.size()].first;
      forward = !(next != low->first + 1 && prev == low->first + 1);
    }
    for (const auto& [l, a] : walk) head[l] = *forward ? a : other_end(l, a);
  }

  std::vector<Crossing> xs(c);
  for (int x = 0; x < c; ++x) {
    auto e = raw_[x];
    if (head.at(e[2]) == Dart{x, 2}) e = {e[2], e[3], e[0], e[1]};
    Crossing& out = xs[x];
    out.edges = e;
    // Orientation of the over strand decides the sign.
    int rot = head.at(raw_[x][2]) == Dart{x, 2} ? 2 : 0;
    Dart over_in_3{x, (3 + rot) % 4};
    out.sign = head.at(e[3]) == over_in_3 ? 1 : -1;
  }
  return PlanarDiagram::from_crossings(std::move(xs), free_loops_);
}

}  // namespace altdist
