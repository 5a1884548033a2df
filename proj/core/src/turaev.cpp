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

#include "altdist/turaev.hpp"

#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>

#include "altdist/bracket.hpp"
#include "altdist/builder.hpp"
#include "altdist/error.hpp"

namespace altdist {

int state_sum_excess(const PlanarDiagram& d) {
  return state_loop_count(d, all_a_state(d)) + state_loop_count(d, all_b_state(d)) -
         d.crossing_count();
}

int turaev_genus_diagram(const PlanarDiagram& d) {
  if (!d.is_connected())
    throw Error(Errc::disconnected,
                "Turaev genus is defined for connected diagrams; use turaev_genus_by_piece");
  int twice = 2 - state_sum_excess(d);
  if (twice < 0 || twice % 2 != 0)
    throw Error(Errc::non_planar, "Turaev genus formula gave a non-integer value");
  return twice / 2;
}

std::vector<int> turaev_genus_by_piece(const PlanarDiagram& d) {
  std::vector<int> out;
  for (const auto& p : split_pieces(d)) out.push_back(turaev_genus_diagram(p));
  return out;
}

std::string Tangle::str() const {
  std::string out;
  for (const auto& x : crossings) {
    if (!out.empty()) out += ' ';
    out += "X(";
    for (int s = 0; s < 4; ++s) {
      if (s) out += ',';
      out += x[s] < 0 ? "B" + std::to_string(-x[s]) : std::to_string(x[s]);
    }
    out += ')';
  }
  return out;
}

Tangle parse_tangle(std::string_view text) {
  Tangle t;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto expect = [&](char c) {
    skip();
    if (i >= text.size() || text[i] != c)
      throw Error(Errc::malformed_token, std::string("tangle: expected '") + c + "' at column " +
                                             std::to_string(i + 1));
    ++i;
  };
  skip();
  if (i >= text.size()) throw Error(Errc::empty_input, "empty tangle");
  while (skip(), i < text.size()) {
    expect('X');
    expect('(');
    std::array<int, 4> x{};
    for (int s = 0; s < 4; ++s) {
      if (s) expect(',');
      skip();
      bool stub = i < text.size() && text[i] == 'B';
      if (stub) ++i;
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i)
        throw Error(Errc::malformed_token, "tangle: expected label at column " + std::to_string(i + 1));
      int v = std::stoi(std::string(text.substr(start, i - start)));
      if (stub && (v < 1 || v > 4)) throw Error(Errc::malformed_token, "tangle: stub must be B1..B4");
      x[s] = stub ? -v : v;
    }
    expect(')');
    t.crossings.push_back(x);
  }
  std::map<int, int> uses;
  for (const auto& x : t.crossings)
    for (int l : x) ++uses[l];
  for (auto [l, n] : uses)
    if (n != (l < 0 ? 1 : 2))
      throw Error(Errc::edge_multiplicity, "tangle label used " + std::to_string(n) + " times");
  for (int k = 1; k <= 4; ++k)
    if (!uses.count(-k)) throw Error(Errc::malformed_token, "tangle is missing stub B" + std::to_string(k));
  return t;
}

namespace {

/// Darts of a tangle at each internal label, and the dart of each stub.
struct TangleEnds {
  std::map<int, std::vector<Dart>> internal;
  std::array<Dart, 4> stub{};

  explicit TangleEnds(const Tangle& t) {
    for (int x = 0; x < t.crossing_count(); ++x)
      for (int s = 0; s < 4; ++s) {
        int l = t.crossings[x][s];
        if (l < 0) {
          stub[-l - 1] = Dart{x, s};
        } else {
          internal[l].push_back(Dart{x, s});
        }
      }
  }
};

}  // namespace

bool is_alternating_tangle(const Tangle& t) {
  TangleEnds ends(t);
  for (const auto& [l, ds] : ends.internal)
    if ((ds[0].slot + ds[1].slot) % 2 == 0) return false;
  return true;
}

bool tangle_extends_crossing(const Tangle& t) {
  const int c = t.crossing_count();
  if (c == 0 || c > 24) return false;
  TangleEnds ends(t);
  // Nodes: 4 darts per crossing, then 4 stubs.
  const int nodes = 4 * c + 4;
  auto node = [](Dart d) { return 4 * d.crossing + d.slot; };
  for (int y = 0; y < c; ++y) {
    for (std::uint32_t mask = 0; mask < (1u << (c - 1)); ++mask) {
      std::vector<int> parent(nodes);
      std::iota(parent.begin(), parent.end(), 0);
      int sets = nodes;
      auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
      };
      auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) {
          parent[a] = b;
          --sets;
        }
      };
      for (const auto& [l, ds] : ends.internal) unite(node(ds[0]), node(ds[1]));
      for (int k = 0; k < 4; ++k) unite(4 * c + k, node(ends.stub[k]));
      int bit = 0;
      for (int z = 0; z < c; ++z) {
        if (z == y) continue;
        bool b = (mask >> bit++) & 1;
        if (b) {
          unite(4 * z + 0, 4 * z + 3);
          unite(4 * z + 1, 4 * z + 2);
        } else {
          unite(4 * z + 0, 4 * z + 1);
          unite(4 * z + 2, 4 * z + 3);
        }
      }
      // Four paths and nothing else means no closed loops were created.
      if (sets != 4) continue;
      for (int shift : {0, 2}) {
        bool ok = true;
        for (int k = 0; k < 4 && ok; ++k)
          ok = find(4 * c + k) == find(4 * y + (k + shift) % 4);
        if (ok) return true;
      }
    }
  }
  return false;
}

Tangle identity_tangle() { return Tangle{{{-1, -2, -3, -4}}}; }

namespace {

void twist(Tangle& t, int k, int& next_label) {
  std::array<Dart, 4> stub = TangleEnds(t).stub;
  const int k1 = (k + 1) % 4;
  const int r = 1 - stub[k].slot % 2;
  std::array<int, 4> x{};
  const int l_k1 = next_label++, l_k = next_label++;
  x[r % 4] = -(k1 + 1);
  x[(r + 1) % 4] = l_k1;
  x[(r + 2) % 4] = l_k;
  x[(r + 3) % 4] = -(k + 1);
  t.crossings[stub[k1].crossing][stub[k1].slot] = l_k1;
  t.crossings[stub[k].crossing][stub[k].slot] = l_k;
  t.crossings.push_back(x);
}

}  // namespace

Tangle random_alternating_tangle(int n, std::mt19937_64& rng) {
  if (n < 1) throw Error(Errc::invalid_parameter, "tangle needs at least one crossing");
  Tangle t = identity_tangle();
  int next_label = 1;
  std::uniform_int_distribution<int> pick(0, 3);
  while (t.crossing_count() < n) twist(t, pick(rng), next_label);
  return t;
}

Tangle twist_tangle(int n) {
  if (n < 1) throw Error(Errc::invalid_parameter, "tangle needs at least one crossing");
  Tangle t = identity_tangle();
  int next_label = 1;
  while (t.crossing_count() < n) twist(t, 1, next_label);
  return t;
}

PlanarDiagram tangle_extend(const PlanarDiagram& d, int k, const Tangle& tau) {
  if (k < 0 || k >= d.crossing_count())
    throw Error(Errc::index_out_of_range, "crossing index " + std::to_string(k) + " out of range");
  if (!is_alternating_tangle(tau)) throw Error(Errc::tangle_not_alternating, "tangle is not alternating");
  if (!tangle_extends_crossing(tau))
    throw Error(Errc::tangle_does_not_extend, "tangle does not extend a crossing");

  const int c = d.crossing_count();
  const int ct = tau.crossing_count();
  const int offset = 2 * c;
  auto mapped = [&](int y) { return y < k ? y : y + ct - 1; };
  const auto& at_x = d.crossings()[k].edges;

  DiagramBuilder b;
  for (int n = 0; n < c - 1 + ct; ++n) b.add_crossing();
  for (int y = 0; y < c; ++y) {
    if (y == k) continue;
    for (int s = 0; s < 4; ++s) b.set_slot(Dart{mapped(y), s}, d.crossings()[y].edges[s]);
  }
  for (int z = 0; z < ct; ++z)
    for (int s = 0; s < 4; ++s) {
      int l = tau.crossings[z][s];
      b.set_slot(Dart{k + z, s}, l < 0 ? at_x[-l - 1] : offset + l);
    }
  for (int e = 0; e < 2 * c; ++e) {
    Dart h = d.head(e), t = d.tail(e);
    if (h.crossing != k) {
      b.hint_head(e, Dart{mapped(h.crossing), h.slot});
    } else if (t.crossing != k) {
      b.hint_tail(e, Dart{mapped(t.crossing), t.slot});
    }
  }
  b.add_free_loops(d.free_loops());
  return b.build(DiagramBuilder::Hints::lowest_label_wins);
}

}  // namespace altdist
