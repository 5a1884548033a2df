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

#include "altdist/families.hpp"

#include <cstdlib>
#include <numeric>

#include "altdist/builder.hpp"
#include "altdist/error.hpp"
#include "altdist/signature.hpp"

namespace altdist {

BraidWord torus_braid(int p, int q) {
  if (p < 2 || q < 1)
    throw Error(Errc::invalid_parameter, "torus braid needs p >= 2 and q >= 1");
  BraidWord w{p, {}};
  for (int k = 0; k < q; ++k)
    for (int i = 1; i < p; ++i) w.letters.push_back(i);
  return w;
}

BraidWord modified_torus_braid(int p, int q) {
  if (p < 3 || q < 3)
    throw Error(Errc::invalid_parameter, "modified torus braid needs p >= 3 and q >= 3");
  BraidWord w = torus_braid(p, q - 1);
  for (int i = 1; i < p; ++i) w.letters.push_back(i % 2 ? i : -i);
  return w;
}

std::vector<int> letter_sign_flips(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands || a.letters.size() != b.letters.size())
    throw Error(Errc::length_mismatch, "braid words have different shapes");
  std::vector<int> out;
  for (std::size_t k = 0; k < a.letters.size(); ++k) {
    if (std::abs(a.letters[k]) != std::abs(b.letters[k]))
      throw Error(Errc::invalid_parameter, "braid words differ beyond letter signs");
    if (a.letters[k] != b.letters[k]) out.push_back(static_cast<int>(k));
  }
  return out;
}

bool toroidal_alternating_check(int p, int q) {
  if (p < 4 || q < 3 || p % 2 != 0 || q % 2 != 1 || q % p == 1) return false;
  if (std::gcd(p, q) != 1) return false;

  // Block permutation of the torus part must preserve position parity.
  std::vector<int> perm = strand_permutation(torus_braid(p, q - 1));
  for (int i = 0; i < p; ++i)
    if (perm[i] % 2 != i % 2) return false;

  // Walk each strand through the modified block. A positive letter carries
  // its left incoming strand over; +1 marks over, -1 under.
  BraidWord block{p, {}};
  for (int i = 1; i < p; ++i) block.letters.push_back(i % 2 ? i : -i);
  std::vector<int> at(p), first(p, 0), last(p, 0);
  std::iota(at.begin(), at.end(), 0);
  std::vector<int> seen(p, 0);  // last type met by strand, indexed by input
  for (int l : block.letters) {
    int i = std::abs(l) - 1;
    int left = at[i], right = at[i + 1];
    int left_type = l > 0 ? 1 : -1;
    for (auto [s, type] : {std::pair{left, left_type}, std::pair{right, -left_type}}) {
      if (seen[s] == type) return false;  // two overs or two unders in a row
      if (!first[s]) first[s] = type;
      seen[s] = type;
    }
    std::swap(at[i], at[i + 1]);
  }
  for (int pos = 0; pos < p; ++pos) last[pos] = seen[at[pos]];

  // Odd and even inputs start on opposite types; outputs reverse the rule.
  for (int i = 0; i < p; ++i) {
    if (!first[i] || first[i] != (i % 2 ? -first[0] : first[0])) return false;
    if (last[i] != -first[i]) return false;
  }
  // Leaving output j, the strand re-enters at input perm[j].
  for (int j = 0; j < p; ++j)
    if (last[j] == first[perm[j]]) return false;
  return true;
}

namespace {

// Slot order used for raw crossings below: south, east, north, west, with
// the vertical strand as the under strand.
void put(DiagramBuilder& b, int x, std::array<int, 4> labels) {
  for (int s = 0; s < 4; ++s) b.set_slot(Dart{x, s}, labels[s]);
}

}  // namespace

PlanarDiagram whitehead_double(const PlanarDiagram& d, int t) {
  if (d.component_count() != 1)
    throw Error(Errc::not_a_knot, "Whitehead double needs a one-component diagram");
  const int c = d.crossing_count();
  const int w = writhe(d);
  DiagramBuilder b;
  int next = 4 * c + 2;
  // Copies of edge e: 2e on its left, 2e + 1 on its right. Edge 0 is cut.
  const int Lt = 0, Rt = 1;
  const int Lh = c ? next++ : Lt;
  const int Rh = c ? next++ : Rt;

  // Parallel copies at a dart: the one on the counterclockwise side first.
  auto copies = [&](int x, int s) {
    int e = d.edge_at(Dart{x, s});
    bool out = d.tail(e) == Dart{x, s};
    int L = 2 * e, R = 2 * e + 1;
    if (e == 0 && !out) L = Lh, R = Rh;
    return out ? std::pair{L, R} : std::pair{R, L};
  };

  for (int x = 0; x < c; ++x) {
    auto [s0_ccw, s0_cw] = copies(x, 0);
    auto [s1_ccw, s1_cw] = copies(x, 1);
    auto [s2_ccw, s2_cw] = copies(x, 2);
    auto [s3_ccw, s3_cw] = copies(x, 3);
    const int iv_e = next++, iv_w = next++, ih_n = next++, ih_s = next++;
    put(b, b.add_crossing(), {s0_ccw, s1_cw, iv_e, ih_s});   // south-east
    put(b, b.add_crossing(), {iv_e, s1_ccw, s2_cw, ih_n});   // north-east
    put(b, b.add_crossing(), {iv_w, ih_n, s2_ccw, s3_cw});   // north-west
    put(b, b.add_crossing(), {s0_cw, ih_s, iv_w, s3_ccw});   // south-west
  }

  // Twists on edge 0 with the left copy on top, running left to right.
  int top = Lt, bot = Rt;
  const int half_twists = 2 * std::abs(t - w);
  const bool left_handed = t > w;
  for (int k = 0; k < half_twists; ++k) {
    int nt = next++, nb = next++;
    int x = b.add_crossing();
    if (left_handed) {
      put(b, x, {bot, nb, nt, top});
    } else {
      put(b, x, {top, bot, nb, nt});
    }
    top = nt;
    bot = nb;
  }

  // Clasp: the tip of the left hook passes over the upper arm of the right
  // hook and under its lower arm.
  const int m1 = next++, m2 = next++;
  put(b, b.add_crossing(), {Lh, top, m2, m1});
  put(b, b.add_crossing(), {m1, m2, bot, Rh});
  return b.build();
}

PlanarDiagram pretzel_diagram(const std::vector<int>& twists) {
  const int n = static_cast<int>(twists.size());
  if (n == 0) throw Error(Errc::invalid_parameter, "pretzel needs at least one column");
  for (int a : twists)
    if (a == 0) throw Error(Errc::invalid_parameter, "pretzel columns need a nonzero twist");
  // top[i] joins column i to column i + 1 above, bottom[i] below.
  std::vector<int> top(n), bottom(n);
  int next = 0;
  for (int i = 0; i < n; ++i) top[i] = next++, bottom[i] = next++;
  DiagramBuilder b;
  for (int i = 0; i < n; ++i) {
    int left = bottom[(i + n - 1) % n], right = bottom[i];
    const int m = std::abs(twists[i]);
    for (int k = 0; k < m; ++k) {
      int nl = k + 1 == m ? top[(i + n - 1) % n] : next++;
      int nr = k + 1 == m ? top[i] : next++;
      int x = b.add_crossing();
      // Corners: south-west left, south-east right, north-west nl, north-east nr.
      if (twists[i] > 0) {
        put(b, x, {right, nr, nl, left});
      } else {
        put(b, x, {left, right, nr, nl});
      }
      left = nl;
      right = nr;
    }
  }
  return b.build();
}

std::string_view to_string(FamilyTag f) noexcept {
  switch (f) {
    case FamilyTag::torus: return "torus";
    case FamilyTag::modified_torus: return "modified_torus";
    case FamilyTag::whitehead: return "whitehead";
  }
  return "?";
}

FamilyTag parse_family(std::string_view name) {
  if (name == "torus") return FamilyTag::torus;
  if (name == "modified" || name == "modified_torus") return FamilyTag::modified_torus;
  if (name == "whitehead") return FamilyTag::whitehead;
  throw Error(Errc::unsupported_family, "unknown family '" + std::string(name) + "'");
}

std::string_view to_string(Quantity q) noexcept {
  switch (q) {
    case Quantity::alt: return "alt";
    case Quantity::dalt: return "dalt";
    case Quantity::turaev_genus: return "turaev_genus";
    case Quantity::alt_genus: return "alt_genus";
    case Quantity::warp: return "warp";
    case Quantity::crossing_number: return "crossing_number";
    case Quantity::jones_span: return "jones_span";
    case Quantity::s_invariant: return "s";
    case Quantity::signature: return "signature";
    case Quantity::hfk_width: return "hfk_width";
  }
  return "?";
}

namespace {

CitedBound exact(Rational v, std::string cite) { return {v, v, std::move(cite)}; }

FamilyFacts torus_facts(const std::vector<int>& params) {
  if (params.size() != 2) throw Error(Errc::invalid_parameter, "torus facts take (p, q)");
  const int p = params[0], q = params[1];
  if (p != 3 || q <= 3 || q % 3 == 0)
    throw Error(Errc::invalid_parameter,
                "torus facts are cited only for T(3, q) with q > 3 prime to 3");
  FamilyFacts f{FamilyTag::torus, params, {}};
  const int n3 = q / 3;
  f.values[Quantity::turaev_genus] = exact(n3, "Abe:Dealternating;Lowrance:Twisted");
  f.values[Quantity::dalt] = exact(n3, "Abe:Dealternating");
  f.values[Quantity::crossing_number] = exact(2 * q, "Murasugi2");
  f.values[Quantity::jones_span] = exact(q + 1, "Jones:Hecke");
  f.values[Quantity::warp] = exact(Rational(1, 2), "Shimizu:WarpingPolynomial");
  f.values[Quantity::signature] = exact(torus_signature_recursive(3, q), "GLM:TorusSignature");
  f.values[Quantity::s_invariant] = exact(torus_s_invariant(3, q), "Rasmussen:KhovanovSlice");
  // Alternation numbers by residue of q mod 6.
  const int n6 = q / 6;
  const std::string kan = "Kanenobu:Alternation";
  if (q == 4 || q == 5) {
    f.values[Quantity::alt] = exact(1, kan);
  } else if (q % 6 == 1 || q % 6 == 2) {
    f.values[Quantity::alt] = exact(2 * n6, kan);
  } else {
    f.values[Quantity::alt] = {2 * n6, Rational(2 * n6 + 1), kan};
  }
  return f;
}

FamilyFacts modified_facts(const std::vector<int>& params) {
  if (params.size() != 2) throw Error(Errc::invalid_parameter, "modified torus facts take (p, q)");
  const int p = params[0], q = params[1];
  if (p < 3 || q < 3 || std::gcd(p, q) != 1)
    throw Error(Errc::invalid_parameter,
                "modified torus facts are cited only for coprime p, q >= 3");
  FamilyFacts f{FamilyTag::modified_torus, params, {}};
  ModifiedTorusBounds mb = modified_torus_bounds(p, q);
  f.values[Quantity::signature] = {mb.sigma_modified.lo, mb.sigma_modified.hi,
                                   "GLM:TorusSignature;CochranLickorish:Unknotting"};
  f.values[Quantity::s_invariant] = {mb.s_modified.lo, mb.s_modified.hi,
                                     "Rasmussen:KhovanovSlice"};
  if (toroidal_alternating_check(p, q))
    f.values[Quantity::alt_genus] = {0, Rational(1), "Adams:ToroidallyAlternating"};
  return f;
}

FamilyFacts whitehead_facts(const std::vector<int>& params) {
  if (params.size() != 1) throw Error(Errc::invalid_parameter, "Whitehead facts take (n)");
  const int n = params[0];
  if (n < 1) throw Error(Errc::invalid_parameter, "Whitehead facts are cited only for n >= 1");
  FamilyFacts f{FamilyTag::whitehead, params, {}};
  f.values[Quantity::alt] = exact(1, "Hedden:Whitehead");
  f.values[Quantity::hfk_width] = exact(n + 1, "Hedden:Whitehead");
  f.values[Quantity::turaev_genus] = {n, std::nullopt, "Hedden:Whitehead;Lowrance:WidthTuraevGenus"};
  f.values[Quantity::alt_genus] = {2, std::nullopt, "Adams:ToroidallyAlternating"};
  return f;
}

}  // namespace

FamilyFacts known_values(FamilyTag family, const std::vector<int>& params) {
  switch (family) {
    case FamilyTag::torus: return torus_facts(params);
    case FamilyTag::modified_torus: return modified_facts(params);
    case FamilyTag::whitehead: return whitehead_facts(params);
  }
  throw Error(Errc::unsupported_family, "unknown family");
}

}  // namespace altdist
