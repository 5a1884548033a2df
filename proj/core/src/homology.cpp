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

#include "altdist/homology.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <numeric>
#include <unordered_map>
#include <vector>

#include "altdist/error.hpp"

namespace altdist {

std::int64_t BigradedDimensions::total() const {
  std::int64_t t = 0;
  for (const auto& [g, n] : dims) t += n;
  return t;
}

std::string BigradedDimensions::to_json() const {
  std::string out = "{\"gradings\":[";
  bool first = true;
  for (const auto& [g, n] : dims) {
    if (!first) out += ',';
    first = false;
    out += '[' + std::to_string(g.first) + ',' + std::to_string(g.second) + ',' + std::to_string(n) + ']';
  }
  return out + "]}";
}

int delta_grading(GradingScheme scheme, std::pair<int, int> g) {
  return scheme == GradingScheme::khovanov ? g.second - 2 * g.first : g.second - g.first;
}

namespace {

/// Loops of one resolution. Crossing loops are numbered first, free loops last.
struct StateLoops {
  int loops = 0;
  std::vector<std::uint8_t> loop_of_edge;
  std::vector<int> rep;  // one edge per crossing loop
};

StateLoops resolve(const PlanarDiagram& d, std::uint32_t state) {
  const int c = d.crossing_count();
  std::vector<int> parent(2 * c);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int k = 0; k < c; ++k) {
    const auto& e = d.crossings()[k].edges;
    if ((state >> k) & 1) {
      parent[find(e[0])] = find(e[3]);
      parent[find(e[1])] = find(e[2]);
    } else {
      parent[find(e[0])] = find(e[1]);
      parent[find(e[2])] = find(e[3]);
    }
  }
  StateLoops s;
  s.loop_of_edge.assign(2 * c, 0);
  std::vector<int> id(2 * c, -1);
  for (int e = 0; e < 2 * c; ++e) {
    int r = find(e);
    if (id[r] < 0) {
      id[r] = static_cast<int>(s.rep.size());
      s.rep.push_back(e);
    }
    s.loop_of_edge[e] = static_cast<std::uint8_t>(id[r]);
  }
  s.loops = static_cast<int>(s.rep.size()) + d.free_loops();
  return s;
}

class Binomials {
 public:
  explicit Binomials(int n) : n_(n + 1), t_(n_ * n_, 0) {
    for (int a = 0; a < n_; ++a) {
      at(a, 0) = 1;
      for (int b = 1; b <= a; ++b) at(a, b) = at(a - 1, b - 1) + (b < a ? at(a - 1, b) : 0);
    }
  }
  std::int64_t operator()(int a, int b) const { return b < 0 || b > a ? 0 : t_[a * n_ + b]; }

 private:
  std::int64_t& at(int a, int b) { return t_[a * n_ + b]; }
  int n_;
  std::vector<std::int64_t> t_;
};

/// Rank among masks of equal popcount ordered colexicographically.
std::int64_t colex_rank(std::uint32_t mask, const Binomials& binom) {
  std::int64_t r = 0;
  int i = 1;
  while (mask) {
    int p = std::countr_zero(mask);
    r += binom(p, i++);
    mask &= mask - 1;
  }
  return r;
}

/// Incremental GF(2) row reduction; rows are sorted column lists.
class SparseEliminator {
 public:
  void add(std::vector<std::int64_t> row) {
    std::vector<std::int64_t> tmp;
    while (!row.empty()) {
      auto it = pivots_.find(row.front());
      if (it == pivots_.end()) {
        pivots_.emplace(row.front(), std::move(row));
        return;
      }
      const auto& p = it->second;
      tmp.clear();
      std::set_symmetric_difference(row.begin(), row.end(), p.begin(), p.end(),
                                    std::back_inserter(tmp));
      row.swap(tmp);
    }
  }
  std::int64_t rank() const { return static_cast<std::int64_t>(pivots_.size()); }

 private:
  std::unordered_map<std::int64_t, std::vector<std::int64_t>> pivots_;
};

std::uint32_t next_same_popcount(std::uint32_t v) {
  std::uint32_t t = v | (v - 1);
  return (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
}

}  // namespace

BigradedDimensions khovanov_f2(const PlanarDiagram& d, const KhovanovConfig& cfg) {
  const int c = d.crossing_count();
  if (c > cfg.crossing_cap || c > 24)
    throw Error(Errc::cap_exceeded, "Khovanov homology capped at " + std::to_string(cfg.crossing_cap) +
                                        " crossings; diagram has " + std::to_string(c));
  int n_plus = 0;
  for (const auto& x : d.crossings()) n_plus += x.sign > 0;
  const int n_minus = c - n_plus;

  BigradedDimensions out;
  out.scheme = GradingScheme::khovanov;
  out.components = d.component_count();

  const std::uint32_t states = 1u << c;
  std::vector<StateLoops> loops(states);
  int max_loops = 0;
  for (std::uint32_t s = 0; s < states; ++s) {
    loops[s] = resolve(d, s);
    max_loops = std::max(max_loops, loops[s].loops);
  }
  if (max_loops > 31) throw Error(Errc::cap_exceeded, "too many loops in a resolution");
  Binomials binom(max_loops);

  // q-degree of generator (s, mask) before the shift: loops - 2 popcount.
  const int shift = n_plus - 2 * n_minus;
  auto popcount_for = [&](std::uint32_t s, int j) {
    int r = std::popcount(s);
    int twice = loops[s].loops + r + shift - j;
    if (twice % 2 != 0 || twice < 0 || twice / 2 > loops[s].loops) return -1;
    return twice / 2;
  };

  int j_lo = INT_MAX, j_hi = INT_MIN;
  for (std::uint32_t s = 0; s < states; ++s) {
    int r = std::popcount(s);
    j_lo = std::min(j_lo, -loops[s].loops + r + shift);
    j_hi = std::max(j_hi, loops[s].loops + r + shift);
  }

  std::vector<std::vector<std::uint32_t>> by_r(c + 1);
  for (std::uint32_t s = 0; s < states; ++s) by_r[std::popcount(s)].push_back(s);

  std::vector<std::int64_t> offset(states, 0);
  std::vector<std::int64_t> row;
  for (int j = j_lo; j <= j_hi; ++j) {
    std::vector<std::int64_t> dim(c + 1, 0);
    for (int r = 0; r <= c; ++r)
      for (std::uint32_t s : by_r[r]) {
        offset[s] = dim[r];
        int k = popcount_for(s, j);
        if (k >= 0) dim[r] += binom(loops[s].loops, k);
      }
    std::vector<std::int64_t> rank(c + 1, 0);
    for (int r = 0; r < c; ++r) {
      if (dim[r] == 0 || dim[r + 1] == 0) continue;
      SparseEliminator elim;
      for (std::uint32_t s : by_r[r]) {
        const int k = popcount_for(s, j);
        if (k < 0) continue;
        const StateLoops& ls = loops[s];
        const int L = ls.loops;
        const int crossing_loops = L - d.free_loops();
        std::uint32_t mask = k == 0 ? 0u : (k == 32 ? ~0u : (1u << k) - 1);
        const std::uint32_t end_bit = L == 32 ? 0 : (1u << L);
        while (true) {
          row.clear();
          for (int x = 0; x < c; ++x) {
            if ((s >> x) & 1) continue;
            const std::uint32_t t = s | (1u << x);
            const StateLoops& lt = loops[t];
            const int t_crossing = lt.loops - d.free_loops();
            const auto& e = d.crossings()[x].edges;
            const int a = ls.loop_of_edge[e[0]], b = ls.loop_of_edge[e[2]];
            // Labels of loops of t that pass through unchanged.
            std::uint32_t base = 0;
            const int t0 = lt.loop_of_edge[e[0]], t1 = lt.loop_of_edge[e[1]];
            for (int l = 0; l < t_crossing; ++l) {
              int from = ls.loop_of_edge[lt.rep[l]];
              if (l == t0 || l == t1) continue;
              if ((mask >> from) & 1) base |= 1u << l;
            }
            for (int f = 0; f < d.free_loops(); ++f)
              if ((mask >> (crossing_loops + f)) & 1) base |= 1u << (t_crossing + f);
            const std::int64_t off = offset[t];
            auto emit = [&](std::uint32_t m) { row.push_back(off + colex_rank(m, binom)); };
            if (a != b) {
              // Merge: loops a, b of s become loop t0 of t.
              int va = (mask >> a) & 1, vb = (mask >> b) & 1;
              if (va && vb) continue;
              emit(base | ((va | vb) ? (1u << t0) : 0u));
            } else {
              // Split: loop a of s becomes loops t0, t1 of t.
              if ((mask >> a) & 1) {
                emit(base | (1u << t0) | (1u << t1));
              } else {
                emit(base | (1u << t0));
                emit(base | (1u << t1));
              }
            }
          }
          std::sort(row.begin(), row.end());
          // Cancel repeated columns in pairs.
          std::size_t w = 0;
          for (std::size_t i = 0; i < row.size();) {
            std::size_t n = 1;
            while (i + n < row.size() && row[i + n] == row[i]) ++n;
            if (n % 2) row[w++] = row[i];
            i += n;
          }
          row.resize(w);
          if (!row.empty()) elim.add(row);
          if (mask == 0 || (k == L)) break;
          mask = next_same_popcount(mask);
          if (mask >= end_bit || mask == 0) break;
        }
      }
      rank[r] = elim.rank();
    }
    for (int r = 0; r <= c; ++r) {
      std::int64_t h = dim[r] - rank[r] - (r > 0 ? rank[r - 1] : 0);
      if (h > 0) out.dims[{r - n_minus, j}] = h;
    }
  }
  return out;
}

int kh_delta_width(const BigradedDimensions& dims) {
  if (dims.dims.empty()) throw Error(Errc::empty_dimensions, "no nonzero gradings");
  int lo = INT_MAX, hi = INT_MIN;
  for (const auto& [g, n] : dims.dims) {
    int delta = delta_grading(GradingScheme::khovanov, g);
    lo = std::min(lo, delta);
    hi = std::max(hi, delta);
  }
  return (hi - lo) / 2 + 1;
}

BigradedDimensions hfk_whitehead_dims(int n) {
  if (n < 0) throw Error(Errc::invalid_parameter, "iteration count must be non-negative");
  if (n > 28) throw Error(Errc::cap_exceeded, "iteration count too large");
  BigradedDimensions out;
  out.scheme = GradingScheme::knot_floer;
  Binomials binom(n);
  out.dims[{0, 0}] += 1;
  for (int m = 0; m <= n; ++m) {
    std::int64_t b = binom(n, m);
    out.dims[{1 - m, 1}] += b << n;
    out.dims[{-m, 0}] += b << (n + 1);
    out.dims[{-1 - m, -1}] += b << n;
  }
  return out;
}

int hfk_width(const BigradedDimensions& dims) {
  if (dims.dims.empty()) throw Error(Errc::empty_dimensions, "no nonzero gradings");
  int lo = INT_MAX, hi = INT_MIN;
  for (const auto& [g, n] : dims.dims) {
    int delta = delta_grading(GradingScheme::knot_floer, g);
    lo = std::min(lo, delta);
    hi = std::max(hi, delta);
  }
  return hi - lo + 1;
}

}  // namespace altdist
