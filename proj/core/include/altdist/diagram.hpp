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

#include <array>
#include <compare>
#include <string>
#include <vector>

namespace altdist {

/// One end of an edge at a crossing: crossing index and slot 0..3.
struct Dart {
  int crossing = 0;
  int slot = 0;
  friend auto operator<=>(const Dart&, const Dart&) = default;
};

/// Four edge labels in counterclockwise order starting with the incoming
/// under-edge. The under strand runs slot 0 -> slot 2. With sign +1 the over
/// strand runs slot 3 -> slot 1, with sign -1 it runs slot 1 -> slot 3.
struct Crossing {
  std::array<int, 4> edges{};
  int sign = 1;
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Corner k of a crossing lies between slots k and k+1 (mod 4).
struct Face {
  std::vector<int> edges;
  std::vector<Dart> corners;
};

/// Oriented link diagram given by a planar 4-valent graph with crossing data.
/// Edge labels are 0..2c-1 internally and printed 1-based. Crossingless
/// components are stored only as a count. Immutable once constructed.
class PlanarDiagram {
 public:
  PlanarDiagram() = default;

  /// Validates and builds derived data. Labels may be any non-negative
  /// integers; they are renumbered by rank. Throws Error on bad input.
  static PlanarDiagram from_crossings(std::vector<Crossing> crossings, int free_loops = 0);
  static PlanarDiagram unlink(int components);
  static PlanarDiagram unknot() { return unlink(1); }

  int crossing_count() const noexcept { return static_cast<int>(crossings_.size()); }
  /// 2c when there are crossings, otherwise the number of free loops.
  int edge_count() const noexcept;
  int component_count() const noexcept {
    return static_cast<int>(components_.size()) + free_loops_;
  }
  int free_loops() const noexcept { return free_loops_; }

  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  const Crossing& crossing(int k) const { return crossings_.at(k); }

  /// Darts where edge e ends (enters a crossing) and starts.
  Dart head(int e) const { return head_[e]; }
  Dart tail(int e) const { return tail_[e]; }
  int edge_at(Dart d) const { return crossings_[d.crossing].edges[d.slot]; }
  /// The dart at the other end of the edge leaving through d.
  Dart across(Dart d) const;
  static bool is_head_slot(const Crossing& x, int slot) noexcept {
    return slot == 0 || slot == (x.sign > 0 ? 3 : 1);
  }

  /// Oriented edge cycles of the components that carry crossings, each
  /// starting at its lowest label; ordered by that label.
  const std::vector<std::vector<int>>& components() const noexcept { return components_; }
  int component_of_edge(int e) const { return edge_component_[e]; }

  /// Crossing sets of the connected pieces of the projection.
  const std::vector<std::vector<int>>& pieces() const noexcept { return pieces_; }
  int piece_of_crossing(int k) const { return crossing_piece_[k]; }
  /// True when the projection (crossing pieces plus free loops) is connected.
  bool is_connected() const noexcept {
    return static_cast<int>(pieces_.size()) + free_loops_ <= 1;
  }

  /// Faces of the rotation system, excluding those of free loops.
  const std::vector<Face>& faces() const noexcept { return faces_; }
  /// Face index of corner k at crossing x.
  int face_of_corner(int x, int k) const { return corner_face_[4 * x + k]; }

  /// "X(a,b,c,d) ..." with 1-based labels.
  std::string to_pd() const;

  friend bool operator==(const PlanarDiagram& a, const PlanarDiagram& b) {
    return a.crossings_ == b.crossings_ && a.free_loops_ == b.free_loops_;
  }

 private:
  void derive();

  std::vector<Crossing> crossings_;
  int free_loops_ = 0;
  std::vector<Dart> head_, tail_;
  std::vector<std::vector<int>> components_;
  std::vector<int> edge_component_;
  std::vector<std::vector<int>> pieces_;
  std::vector<int> crossing_piece_;
  std::vector<Face> faces_;
  std::vector<int> corner_face_;
};

int writhe(const PlanarDiagram& d);

/// Swaps over and under at crossing k; an involution.
PlanarDiagram crossing_change(const PlanarDiagram& d, int k);

/// Faces of a connected diagram; a crossingless unknot has two empty faces.
std::vector<Face> trace_faces(const PlanarDiagram& d);

/// Disjoint union, with the labels of b shifted past those of a.
PlanarDiagram disjoint_union(const PlanarDiagram& a, const PlanarDiagram& b);

/// Mirror image: every crossing changed.
PlanarDiagram mirror(const PlanarDiagram& d);

/// One diagram per connected piece of the projection; free loops are omitted.
std::vector<PlanarDiagram> split_pieces(const PlanarDiagram& d);

/// Connected sum cutting edge e1 of a and edge e2 of b (0-based labels).
/// A summand without crossings is dropped.
PlanarDiagram connected_sum(const PlanarDiagram& a, const PlanarDiagram& b, int e1 = 0, int e2 = 0);

}  // namespace altdist
