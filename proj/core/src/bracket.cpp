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

#include "altdist/bracket.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <thread>

#include "altdist/error.hpp"

namespace altdist {

namespace {

class LoopCounter {
 public:
  explicit LoopCounter(const PlanarDiagram& d) : d_(d), parent_(2 * d.crossing_count()) {}

  /// bit k of mask set means crossing k takes its B-smoothing.
  int count(std::uint64_t mask) {
    std::iota(parent_.begin(), parent_.end(), 0);
    int sets = static_cast<int>(parent_.size());
    for (int k = 0; k < d_.crossing_count(); ++k) {
      const auto& e = d_.crossings()[k].edges;
      if ((mask >> k) & 1) {
        sets -= unite(e[0], e[3]);
        sets -= unite(e[1], e[2]);
      } else {
        sets -= unite(e[0], e[1]);
        sets -= unite(e[2], e[3]);
      }
    }
    return sets + d_.free_loops();
  }

 private:
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  int unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return 0;
    parent_[a] = b;
    return 1;
  }

  const PlanarDiagram& d_;
  std::vector<int> parent_;
};

}  // namespace

StateAssignment all_a_state(const PlanarDiagram& d) {
  return StateAssignment(d.crossing_count(), Resolution::A);
}

StateAssignment all_b_state(const PlanarDiagram& d) {
  return StateAssignment(d.crossing_count(), Resolution::B);
}

int state_loop_count(const PlanarDiagram& d, const StateAssignment& s) {
  if (static_cast<int>(s.size()) != d.crossing_count())
    throw Error(Errc::length_mismatch, "state has " + std::to_string(s.size()) +
                                           " entries for " + std::to_string(d.crossing_count()) +
                                           " crossings");
  std::vector<int> parent(2 * d.crossing_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int k = 0; k < d.crossing_count(); ++k) {
    const auto& e = d.crossings()[k].edges;
    if (s[k] == Resolution::A) {
      parent[find(e[0])] = find(e[1]);
      parent[find(e[2])] = find(e[3]);
    } else {
      parent[find(e[0])] = find(e[3]);
      parent[find(e[1])] = find(e[2]);
    }
  }
  int loops = d.free_loops();
  for (int i = 0; i < static_cast<int>(parent.size()); ++i)
    if (find(i) == i) ++loops;
  return loops;
}

LaurentPolynomial kauffman_bracket(const PlanarDiagram& d, const BracketConfig& cfg) {
  const int c = d.crossing_count();
  if (c > cfg.crossing_cap || c > 62)
    throw Error(Errc::cap_exceeded, "bracket cap of " + std::to_string(cfg.crossing_cap) +
                                        " crossings exceeded (" + std::to_string(c) + ")");
  const int max_loops = 2 * c + d.free_loops() + 1;
  // hist[b][loops] counts states with b B-smoothings.
  using Histogram = std::vector<std::vector<std::int64_t>>;
  const std::uint64_t states = std::uint64_t{1} << c;
  const int chunks = std::max(1, std::min<int>(cfg.threads, static_cast<int>(std::min<std::uint64_t>(states, 64))));
  std::vector<Histogram> partial(chunks, Histogram(c + 1, std::vector<std::int64_t>(max_loops + 1, 0)));
  auto work = [&](int chunk) {
    LoopCounter counter(d);
    std::uint64_t lo = states * chunk / chunks, hi = states * (chunk + 1) / chunks;
    for (std::uint64_t m = lo; m < hi; ++m)
      ++partial[chunk][std::popcount(m)][counter.count(m)];
  };
  if (chunks == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < chunks; ++i) pool.emplace_back(work, i);
    for (auto& t : pool) t.join();
  }

  const auto delta = LaurentPolynomial::monomial(-1, 8, Variable::A) +
                     LaurentPolynomial::monomial(-1, -8, Variable::A);
  std::vector<LaurentPolynomial> delta_pow{LaurentPolynomial::constant(1, Variable::A)};
  while (static_cast<int>(delta_pow.size()) < max_loops) delta_pow.push_back(delta_pow.back() * delta);

  LaurentPolynomial out(Variable::A);
  for (int b = 0; b <= c; ++b)
    for (int loops = 1; loops <= max_loops; ++loops) {
      std::int64_t n = 0;
      for (const auto& h : partial) n += h[b][loops];
      if (n == 0) continue;
      out += LaurentPolynomial::monomial(n, 4 * (c - 2 * b), Variable::A) * delta_pow[loops - 1];
    }
  return out;
}

LaurentPolynomial jones_from_bracket(const LaurentPolynomial& bracket, int writhe) {
  auto factor = LaurentPolynomial::monomial(writhe % 2 == 0 ? 1 : -1, -12 * writhe, Variable::A);
  return (factor * bracket).substitute(Variable::t, Rational(-1, 4));
}

LaurentPolynomial jones_polynomial(const PlanarDiagram& d, const BracketConfig& cfg) {
  return jones_from_bracket(kauffman_bracket(d, cfg), writhe(d));
}

Rational jones_span(const PlanarDiagram& d, const BracketConfig& cfg) {
  return jones_polynomial(d, cfg).span();
}

}  // namespace altdist
