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

#include "altdist/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "altdist/error.hpp"

namespace altdist {

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

PlanarDiagram PlanarDiagram::from_crossings(std::vector<Crossing> crossings, int free_loops) {
  if (free_loops < 0) throw Error(Errc::invalid_parameter, "negative free loop count");
  std::map<int, int> count;
  for (const auto& x : crossings) {
    if (x.sign != 1 && x.sign != -1)
      throw Error(Errc::malformed_token, "crossing sign must be +1 or -1");
    for (int e : x.edges) {
      if (e < 0) throw Error(Errc::malformed_token, "negative edge label");
      ++count[e];
    }
  }
  for (const auto& [label, n] : count)
    if (n > 2)
      throw Error(Errc::edge_multiplicity, "edge " + std::to_string(label + 1) + " appears " +
                                               std::to_string(n) + " times");
  int rank = 0;
  for (auto& [label, n] : count) {
    if (n != 2)
      throw Error(Errc::edge_multiplicity, "edge " + std::to_string(label + 1) + " appears " +
                                               std::to_string(n) + " times");
    n = rank++;
  }
  for (auto& x : crossings)
    for (int& e : x.edges) e = count[e];

  PlanarDiagram d;
  d.crossings_ = std::move(crossings);
  d.free_loops_ = free_loops;
  d.derive();
  return d;
}

PlanarDiagram PlanarDiagram::unlink(int components) {
  if (components < 1) throw Error(Errc::invalid_parameter, "unlink needs a component");
  return from_crossings({}, components);
}

int PlanarDiagram::edge_count() const noexcept {
  return crossings_.empty() ? free_loops_ : 2 * crossing_count();
}

Dart PlanarDiagram::across(Dart d) const {
  int e = edge_at(d);
  Dart h = head_[e];
  return h == d ? tail_[e] : h;
}

void PlanarDiagram::derive() {
  const int c = crossing_count();
  const int ne = 2 * c;
  head_.assign(ne, Dart{-1, -1});
  tail_.assign(ne, Dart{-1, -1});
  for (int x = 0; x < c; ++x) {
    for (int s = 0; s < 4; ++s) {
      int e = crossings_[x].edges[s];
      auto& slot = is_head_slot(crossings_[x], s) ? head_[e] : tail_[e];
      if (slot.crossing >= 0)
        throw Error(Errc::inconsistent_orientation,
                    "edge " + std::to_string(e + 1) + " has two heads or two tails");
      slot = Dart{x, s};
    }
  }

  // Components: leave the head dart straight through the crossing.
  edge_component_.assign(ne, -1);
  components_.clear();
  for (int start = 0; start < ne; ++start) {
    if (edge_component_[start] >= 0) continue;
    std::vector<int> cycle;
    int e = start;
    const int id = static_cast<int>(components_.size());
    while (edge_component_[e] < 0) {
      edge_component_[e] = id;
      cycle.push_back(e);
      Dart h = head_[e];
      e = crossings_[h.crossing].edges[(h.slot + 2) % 4];
    }
    if (e != start)
      throw Error(Errc::inconsistent_orientation, "component traversal does not close up");
    components_.push_back(std::move(cycle));
  }

  // Pieces of the projection.
  DisjointSets ds(c);
  for (int e = 0; e < ne; ++e) ds.unite(head_[e].crossing, tail_[e].crossing);
  std::map<int, int> root_piece;
  pieces_.clear();
  crossing_piece_.assign(c, -1);
  for (int x = 0; x < c; ++x) {
    auto [it, fresh] = root_piece.try_emplace(ds.find(x), static_cast<int>(pieces_.size()));
    if (fresh) pieces_.emplace_back();
    pieces_[it->second].push_back(x);
    crossing_piece_[x] = it->second;
  }

  // Faces: arrive at (y,t), continue from slot t+1; corner t of y is on the face.
  faces_.clear();
  corner_face_.assign(4 * c, -1);
  for (int x = 0; x < c; ++x) {
    for (int s = 0; s < 4; ++s) {
      if (corner_face_[4 * x + (s + 3) % 4] >= 0) continue;
      // Leaving dart (x,s) belongs to the face containing corner s-1 of x.
      Face f;
      const int id = static_cast<int>(faces_.size());
      Dart d{x, s};
      while (true) {
        Dart arrive = across(d);
        int corner = 4 * arrive.crossing + arrive.slot;
        if (corner_face_[corner] >= 0) break;
        corner_face_[corner] = id;
        f.edges.push_back(edge_at(d));
        f.corners.push_back(arrive);
        d = Dart{arrive.crossing, (arrive.slot + 1) % 4};
      }
      faces_.push_back(std::move(f));
    }
  }
  if (std::find(corner_face_.begin(), corner_face_.end(), -1) != corner_face_.end())
    throw Error(Errc::non_planar, "face tracing left corners unassigned");

  std::vector<int> face_count(pieces_.size(), 0);
  for (const auto& f : faces_) ++face_count[crossing_piece_[f.corners.front().crossing]];
  for (std::size_t p = 0; p < pieces_.size(); ++p) {
    int v = static_cast<int>(pieces_[p].size());
    if (v - 2 * v + face_count[p] != 2)
      throw Error(Errc::non_planar, "Euler characteristic check failed: V - E + F = " +
                                        std::to_string(face_count[p] - v));
  }
}

std::string PlanarDiagram::to_pd() const {
  std::string out;
  for (const auto& x : crossings_) {
    if (!out.empty()) out += ' ';
    out += "X(";
    for (int s = 0; s < 4; ++s) {
      if (s) out += ',';
      out += std::to_string(x.edges[s] + 1);
    }
    out += ')';
  }
  return out;
}

int writhe(const PlanarDiagram& d) {
  int w = 0;
  for (const auto& x : d.crossings()) w += x.sign;
  return w;
}

PlanarDiagram crossing_change(const PlanarDiagram& d, int k) {
  if (k < 0 || k >= d.crossing_count())
    throw Error(Errc::index_out_of_range, "crossing index " + std::to_string(k) + " out of range");
  std::vector<Crossing> xs = d.crossings();
  Crossing& x = xs[k];
  const auto e = x.edges;
  if (x.sign > 0) {
    x.edges = {e[3], e[0], e[1], e[2]};
  } else {
    x.edges = {e[1], e[2], e[3], e[0]};
  }
  x.sign = -x.sign;
  return PlanarDiagram::from_crossings(std::move(xs), d.free_loops());
}

std::vector<Face> trace_faces(const PlanarDiagram& d) {
  if (!d.is_connected())
    throw Error(Errc::disconnected, "face tracing needs a connected diagram");
  if (d.crossing_count() == 0) return {Face{}, Face{}};
  return d.faces();
}

PlanarDiagram disjoint_union(const PlanarDiagram& a, const PlanarDiagram& b) {
  std::vector<Crossing> xs = a.crossings();
  const int shift = 2 * a.crossing_count();
  for (Crossing x : b.crossings()) {
    for (int& e : x.edges) e += shift;
    xs.push_back(x);
  }
  return PlanarDiagram::from_crossings(std::move(xs), a.free_loops() + b.free_loops());
}

PlanarDiagram mirror(const PlanarDiagram& d) {
  PlanarDiagram out = d;
  for (int k = 0; k < d.crossing_count(); ++k) out = crossing_change(out, k);
  return out;
}

std::vector<PlanarDiagram> split_pieces(const PlanarDiagram& d) {
  std::vector<PlanarDiagram> out;
  for (const auto& piece : d.pieces()) {
    std::vector<Crossing> xs;
    for (int x : piece) xs.push_back(d.crossings()[x]);
    out.push_back(PlanarDiagram::from_crossings(std::move(xs)));
  }
  return out;
}

PlanarDiagram connected_sum(const PlanarDiagram& a, const PlanarDiagram& b, int e1, int e2) {
  if (a.crossing_count() == 0) return b;
  if (b.crossing_count() == 0) return a;
  if (e1 < 0 || e1 >= a.edge_count() || e2 < 0 || e2 >= b.edge_count())
    throw Error(Errc::index_out_of_range, "connected sum edge out of range");
  const int shift = 2 * a.crossing_count();
  std::vector<Crossing> xs = a.crossings();
  for (Crossing x : b.crossings()) {
    for (int& e : x.edges) e += shift;
    xs.push_back(x);
  }
  // e1 now runs from the tail of e2 into the head of e1, and vice versa.
  Dart t1 = a.tail(e1);
  Dart t2 = b.tail(e2);
  xs[t1.crossing].edges[t1.slot] = e2 + shift;
  xs[t2.crossing + a.crossing_count()].edges[t2.slot] = e1;
  return PlanarDiagram::from_crossings(std::move(xs), a.free_loops() + b.free_loops());
}

}  // namespace altdist
