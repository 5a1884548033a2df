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

#include "altdist/signature.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <queue>
#include <utility>

#include "altdist/error.hpp"

namespace altdist {

namespace {

/// Colour 0/1 per face; corners k and k+2 share a colour, k and k+1 differ.
std::vector<int> face_colours(const PlanarDiagram& d) {
  const auto& faces = d.faces();
  std::vector<int> colour(faces.size(), -1);
  std::vector<std::vector<std::pair<int, int>>> adj(faces.size());
  for (int x = 0; x < d.crossing_count(); ++x)
    for (int k = 0; k < 4; ++k) {
      int f = d.face_of_corner(x, k), g = d.face_of_corner(x, (k + 1) % 4);
      adj[f].emplace_back(g, 1);
      adj[g].emplace_back(f, 1);
      int h = d.face_of_corner(x, (k + 2) % 4);
      adj[f].emplace_back(h, 0);
    }
  for (std::size_t s = 0; s < faces.size(); ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::queue<int> todo;
    todo.push(static_cast<int>(s));
    while (!todo.empty()) {
      int f = todo.front();
      todo.pop();
      for (auto [g, diff] : adj[f]) {
        int want = colour[f] ^ diff;
        if (colour[g] < 0) {
          colour[g] = want;
          todo.push(g);
        } else if (colour[g] != want) {
          throw Error(Errc::non_planar, "faces admit no checkerboard shading");
        }
      }
    }
  }
  return colour;
}

GoeritzForm build_form(const PlanarDiagram& d, bool swap) {
  if (!d.is_connected()) throw Error(Errc::disconnected, "signature needs a connected diagram");
  GoeritzForm g;
  if (d.crossing_count() == 0) return g;
  const auto& faces = d.faces();
  auto colour = face_colours(d);
  int largest = 0;
  for (int f = 1; f < static_cast<int>(faces.size()); ++f)
    if (faces[f].corners.size() > faces[largest].corners.size()) largest = f;
  const int white = colour[largest] ^ (swap ? 1 : 0);

  std::map<int, int> index;
  if (colour[largest] == white) index[largest] = 0;
  for (int f = 0; f < static_cast<int>(faces.size()); ++f)
    if (colour[f] == white && !index.count(f)) index.emplace(f, static_cast<int>(index.size()));
  g.white_faces.resize(index.size());
  for (auto [f, i] : index) g.white_faces[i] = f;

  const int n = static_cast<int>(index.size());
  IntMatrix full(n, std::vector<std::int64_t>(n, 0));
  for (int x = 0; x < d.crossing_count(); ++x) {
    const bool odd_white = colour[d.face_of_corner(x, 1)] == white;
    // eta = +1 when the white corners are the B-corners 0 and 2.
    const int eta = odd_white ? -1 : 1;
    const int a = index.at(d.face_of_corner(x, odd_white ? 1 : 0));
    const int b = index.at(d.face_of_corner(x, odd_white ? 3 : 2));
    if (a != b) {
      full[a][b] -= eta;
      full[b][a] -= eta;
      full[a][a] += eta;
      full[b][b] += eta;
    }
    // The oriented smoothing merges corners 1, 3 at a positive crossing and
    // corners 0, 2 at a negative one; type II when it merges black corners.
    const bool merges_white = (d.crossing(x).sign > 0) == odd_white;
    if (!merges_white) g.correction += eta;
  }
  g.matrix.assign(n - 1, std::vector<std::int64_t>(n - 1, 0));
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) g.matrix[i - 1][j - 1] = full[i][j];
  return g;
}

}  // namespace

int matrix_signature(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw Error(Errc::invalid_parameter, "matrix is not square");
    for (std::size_t j = 0; j < n; ++j) {
      if (m[i][j] != m[j][i]) throw Error(Errc::invalid_parameter, "matrix is not symmetric");
      a[i][j] = mpq_class(static_cast<long>(m[i][j]));
    }
  }
  std::vector<bool> done(n, false);
  int sig = 0;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t piv = n;
    for (std::size_t i = 0; i < n && piv == n; ++i)
      if (!done[i] && sgn(a[i][i]) != 0) piv = i;
    if (piv == n) {
      // Zero diagonal: adding row/column j to i makes a[i][i] = 2 a[i][j].
      std::size_t pi = n, pj = n;
      for (std::size_t i = 0; i < n && pi == n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!done[i] && !done[j] && i != j && sgn(a[i][j]) != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) break;
      for (std::size_t k = 0; k < n; ++k) a[pi][k] += a[pj][k];
      for (std::size_t k = 0; k < n; ++k) a[k][pi] += a[k][pj];
      piv = pi;
    }
    done[piv] = true;
    const mpq_class p = a[piv][piv];
    sig += sgn(p) > 0 ? 1 : -1;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || sgn(a[i][piv]) == 0) continue;
      mpq_class f = a[i][piv] / p;
      for (std::size_t k = 0; k < n; ++k) a[i][k] -= f * a[piv][k];
    }
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i]) a[piv][i] = a[i][piv] = 0;
  }
  return sig;
}

GoeritzForm goeritz_form(const PlanarDiagram& d, bool swap_colours) {
  return build_form(d, swap_colours);
}

int goeritz_signature(const PlanarDiagram& d, bool swap_colours) {
  GoeritzForm g = build_form(d, swap_colours);
  return matrix_signature(g.matrix) - g.correction;
}

int torus_signature_recursive(int p, int q) {
  if (p < 1 || q < 1) throw Error(Errc::invalid_parameter, "torus parameters must be positive");
  static std::mutex mu;
  static std::map<std::pair<int, int>, int> memo;
  if (p > q) std::swap(p, q);
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = memo.find({p, q}); it != memo.end()) return it->second;
  }
  const bool odd = p % 2 == 1;
  int v;
  if (p == 1) {
    v = 0;
  } else if (p == 2) {
    v = 1 - q;
  } else if (q == 2 * p) {
    v = 1 - p * p;
  } else if (q > 2 * p) {
    v = torus_signature_recursive(p, q - 2 * p) - p * p + (odd ? 1 : 0);
  } else if (q == p) {
    // Rule (3) with q = p reads sigma = c - p^2 - sigma.
    v = ((odd ? 1 : 2) - p * p) / 2;
  } else {
    v = (odd ? 1 : 2) - p * p - torus_signature_recursive(p, 2 * p - q);
  }
  std::lock_guard<std::mutex> lock(mu);
  memo[{p, q}] = v;
  return v;
}

int torus_signature_closed(int p, int n, int r) {
  if (p < 2 || n < 0 || r <= 0 || r >= p)
    throw Error(Errc::invalid_parameter, "closed form needs p >= 2, n >= 0 and 0 < r < p");
  const bool p_odd = p % 2 == 1, n_odd = n % 2 == 1;
  const int p2 = p * p;
  if (!n_odd) {
    return p_odd ? torus_signature_recursive(p, r) - n * (p2 - 1) / 2
                 : torus_signature_recursive(p, r) - n * p2 / 2;
  }
  return p_odd ? -torus_signature_recursive(p, p - r) - (n + 1) * (p2 - 1) / 2
               : -torus_signature_recursive(p, p - r) - (n + 1) * p2 / 2 + 2;
}

int torus_s_invariant(int p, int q) {
  if (p < 1 || q < 1 || std::gcd(p, q) != 1)
    throw Error(Errc::invalid_parameter, "s-invariant formula needs coprime positive p, q");
  return p * q - p - q + 1;
}

ModifiedTorusBounds modified_torus_bounds(int p, int q) {
  if (p < 3 || q < 3 || std::gcd(p, q) != 1)
    throw Error(Errc::invalid_parameter, "modified torus bounds need coprime p, q >= 3");
  const Rational P(p), Q(q), half(1, 2);
  const Rational lower = -(P - 1) * (P - 2) - half * P * Q;
  ModifiedTorusBounds b;
  b.sigma_torus = {lower, (P - 1) * (P - 2) - half * (P - 1) * Q};
  b.sigma_modified = {lower, (P - 1) * (P - 1) - half * (P - 1) * Q};
  b.s_modified = {P * Q - 2 * P - Q + 2, P * Q - P - Q + 1};
  return b;
}

}  // namespace altdist
