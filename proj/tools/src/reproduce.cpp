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

#include "altdist_cli/reproduce.hpp"

#include <numeric>
#include <random>

#include "altdist/alternation.hpp"
#include "altdist/bracket.hpp"
#include "altdist/braid.hpp"
#include "altdist/error.hpp"
#include "altdist/families.hpp"
#include "altdist/homology.hpp"
#include "altdist/signature.hpp"
#include "altdist/turaev.hpp"
#include "altdist/warping.hpp"

namespace altdist::cli {

namespace {

class Suite {
 public:
  explicit Suite(std::string name) : name_(std::move(name)) {}

  void check(bool ok, std::string statement, std::string citation, std::string detail = {}) {
    claims_.push_back({name_, std::move(statement), std::move(citation), ok, std::move(detail)});
  }
  std::vector<Claim> take() { return std::move(claims_); }

 private:
  std::string name_;
  std::vector<Claim> claims_;
};

std::string show(const Rational& r) { return r.str(); }

LaurentPolynomial t3q_jones(int q) {
  LaurentPolynomial v(Variable::t);
  v.add_term(4 * (q - 1), 1);
  v.add_term(4 * (q + 1), 1);
  v.add_term(8 * q, -1);
  return v;
}

std::vector<Claim> suite_t3q(const ReportConfig& cfg) {
  Suite s("t3q");
  for (int q : {4, 5, 7, 8}) {
    const std::string tag = "T(3," + std::to_string(q) + ")";
    const PlanarDiagram d = braid_closure(torus_braid(3, q));
    BracketConfig bc;
    bc.crossing_cap = std::max(cfg.bracket_cap, d.crossing_count());
    const LaurentPolynomial v = jones_polynomial(d, bc);
    s.check(v == t3q_jones(q), tag + ": V = t^(q-1) + t^(q+1) - t^(2q)", "Jones:Hecke", v.str());
    s.check(v.span() == Rational(q + 1), tag + ": span V = q + 1", "Jones:Hecke", show(v.span()));

    const Rational warp = warping_span_diagram(d);
    s.check(warp == Rational(1, 2), tag + ": warp(D) = 1/2", "Shimizu:WarpingPolynomial", show(warp));

    const DistanceReport r =
        compute_report(tag, {d}, known_values(FamilyTag::torus, {3, q}), cfg, {tag});
    const auto& cms = r.c_minus_span;
    s.check(cms.exact() && cms.lower == Rational(q - 1), tag + ": c - span = q - 1 with c = 2q",
            "Murasugi2", show(cms.lower) + ".." + ext_str(cms.upper));
    s.check(r.turaev_genus.lower == Rational(q / 3), tag + ": g_T lower = floor(q/3)",
            "Abe:Dealternating;Lowrance:Twisted", show(r.turaev_genus.lower));
    if (r.kh_width) {
      s.check(Rational(*r.kh_width - 2) <= r.turaev_genus.lower,
              tag + ": w(Kh) - 2 <= g_T", "Lowrance:WidthTuraevGenus",
              "w(Kh) = " + std::to_string(*r.kh_width));
    }
    const bool gap = cms.exact() && r.dalt.exact() &&
                     cms.lower - r.dalt.lower == Rational(q - 1 - q / 3);
    s.check(gap, tag + ": (c - span) - dalt = q - 1 - floor(q/3)", "Abe:Dealternating",
            show(cms.lower - r.dalt.lower));
    const auto bad = check_consistency(r);
    s.check(bad.empty(), tag + ": report satisfies the inequality lattice", "derived",
            bad.empty() ? "" : bad.front());
  }
  return s.take();
}

std::vector<Claim> suite_pretzel(const ReportConfig& cfg) {
  Suite s("pretzel10_125");
  const PlanarDiagram d = pretzel_diagram({5, -3, 2});
  const int c = d.crossing_count();
  const int dalt = dealternating_number_diagram(d);
  BracketConfig bc;
  bc.crossing_cap = std::max(cfg.bracket_cap, c);
  const Rational span = jones_span(d, bc);
  s.check(c == 10, "P(5,-3,2): c(D) = 10", "derived", std::to_string(c));
  s.check(dalt == 3, "P(5,-3,2): dalt(D) = 3", "derived", std::to_string(dalt));
  s.check(span == Rational(8), "P(5,-3,2): span V = 8", "derived", show(span));
  s.check(Rational(dalt) > Rational(c) - span, "P(5,-3,2): dalt(D) = 3 > 2 = c(D) - span V",
          "Turaev:SimpleProof", std::to_string(dalt) + " vs " + show(Rational(c) - span));
  const int gt = turaev_genus_diagram(d);
  s.check(Rational(gt) <= Rational(c) - span, "P(5,-3,2): g_T(D) <= c(D) - span V",
          "Turaev:SimpleProof", std::to_string(gt));
  return s.take();
}

std::vector<Claim> suite_modified() {
  Suite s("modified-torus");
  for (int p = 3; p <= 7; ++p)
    for (int q = 3; q <= 7; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const std::string tag = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
      const ModifiedTorusBounds b = modified_torus_bounds(p, q);
      const int st = goeritz_signature(braid_closure(torus_braid(p, q)));
      const int sm = goeritz_signature(braid_closure(modified_torus_braid(p, q)));
      s.check(b.sigma_torus.contains(Rational(st)), "sigma T" + tag + " in its cited interval",
              "GLM:TorusSignature",
              std::to_string(st) + " in [" + show(b.sigma_torus.lo) + "," + show(b.sigma_torus.hi) + "]");
      s.check(b.sigma_modified.contains(Rational(sm)), "sigma of modified T" + tag + " in its interval",
              "GLM:TorusSignature;CochranLickorish:Unknotting",
              std::to_string(sm) + " in [" + show(b.sigma_modified.lo) + "," +
                  show(b.sigma_modified.hi) + "]");
      if (p % 2 == 0 && q % 2 == 1) {
        const bool expect = q % p != 1;
        s.check(toroidal_alternating_check(p, q) == expect,
                "modified T" + tag + (expect ? " passes" : " fails") + " the toroidal parity check",
                "Adams:ToroidallyAlternating");
      }
    }
  return s.take();
}

std::vector<Claim> suite_whitehead(const ReportConfig& cfg) {
  Suite s("whitehead");
  for (int n = 1; n <= 6; ++n) {
    const std::string tag = "W_" + std::to_string(n);
    const int w = hfk_width(hfk_whitehead_dims(n));
    s.check(w == n + 1, tag + ": w(HFK) = n + 1", "Hedden:Whitehead", std::to_string(w));
    const DistanceReport r = compute_report(tag, {}, known_values(FamilyTag::whitehead, {n}), cfg);
    s.check(r.turaev_genus.lower >= Rational(n), tag + ": g_T >= n",
            "Hedden:Whitehead;Lowrance:WidthTuraevGenus", show(r.turaev_genus.lower));
    s.check(r.alt.exact() && r.alt.lower == Rational(1), tag + ": alt = 1", "Hedden:Whitehead",
            show(r.alt.lower) + ".." + ext_str(r.alt.upper));
    const bool gap = r.alt.upper && r.turaev_genus.lower - *r.alt.upper >= Rational(n - 1);
    s.check(gap, tag + ": g_T - alt >= n - 1", "Hedden:Whitehead;Lowrance:WidthTuraevGenus");
    s.check(r.alt_genus.lower >= Rational(2), tag + ": g_alt > 1", "Adams:ToroidallyAlternating",
            show(r.alt_genus.lower));
  }
  return s.take();
}

/// Connected braid closure on 3 or 4 strands with 3 to 9 letters.
PlanarDiagram random_connected_closure(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> strands(3, 4), len(3, 9), coin(0, 1);
  while (true) {
    BraidWord w;
    w.strands = strands(rng);
    std::uniform_int_distribution<int> gen(1, w.strands - 1);
    const int n = len(rng);
    for (int i = 0; i < n; ++i) w.letters.push_back(coin(rng) ? gen(rng) : -gen(rng));
    PlanarDiagram d = braid_closure(w);
    if (d.is_connected()) return d;
  }
}

std::vector<Claim> suite_tangle() {
  Suite s("tangle-ext");
  std::mt19937_64 rng(20240611);
  int kept = 0, excess_ok = 0, genus_ok = 0, count_ok = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const PlanarDiagram d = random_connected_closure(rng);
    std::uniform_int_distribution<int> pick(0, d.crossing_count() - 1), size(1, 7);
    const int k = pick(rng);
    const Tangle tau = random_alternating_tangle(size(rng), rng);
    const PlanarDiagram e = tangle_extend(d, k, tau);
    ++kept;
    excess_ok += state_sum_excess(e) == state_sum_excess(d);
    genus_ok += turaev_genus_diagram(e) == turaev_genus_diagram(d);
    count_ok += e.crossing_count() == d.crossing_count() - 1 + tau.crossing_count();
  }
  const std::string of = " of " + std::to_string(kept);
  s.check(count_ok == kept, "random extensions: c(D(x,tau)) = c(D) - 1 + c(tau)", "derived",
          std::to_string(count_ok) + of);
  s.check(excess_ok == kept, "random extensions: |s_A| + |s_B| - c preserved", "Turaev:SimpleProof",
          std::to_string(excess_ok) + of);
  s.check(genus_ok == kept, "random extensions: g_T(D(x,tau)) = g_T(D)", "Turaev:SimpleProof",
          std::to_string(genus_ok) + of);

  const PlanarDiagram trefoil = braid_closure({2, {1, 1, 1}});
  s.check(tangle_extend(trefoil, 0, identity_tangle()) == trefoil,
          "identity extension returns the diagram", "derived");
  const PlanarDiagram t5 = tangle_extend(trefoil, 0, twist_tangle(3));
  s.check(t5.crossing_count() == 5 && turaev_genus_diagram(t5) == 0,
          "trefoil extended by a 3-twist: 5 crossings, g_T = 0", "derived");

  // Witness: a crossing of a minimal flip set of P(5,-3,2).
  const PlanarDiagram p = pretzel_diagram({5, -3, 2});
  const int kp = dealternating_number_diagram(p);
  const auto pieces = alternating_assignments_by_piece(p);
  const auto& flip = pieces[0].flip.size() <= pieces[0].complement.size() ? pieces[0].flip
                                                                          : pieces[0].complement;
  for (int n = 1; n <= 7; ++n) {
    const PlanarDiagram e = tangle_extend(p, flip.front(), twist_tangle(n));
    const int want = std::min(p.crossing_count() - kp, n + kp - 1);
    const int got = dealternating_number_diagram(e);
    s.check(got == want,
            "P(5,-3,2) extended by a " + std::to_string(n) + "-twist: dalt = min(c - k, c(tau) + k - 1)",
            "derived", std::to_string(got) + " vs " + std::to_string(want));
  }
  return s.take();
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"t3q", "pretzel10_125", "modified-torus", "whitehead",
                                                 "tangle-ext"};
  return names;
}

std::vector<Claim> run_suite(std::string_view name, const ReportConfig& cfg) {
  if (name == "t3q") return suite_t3q(cfg);
  if (name == "pretzel10_125") return suite_pretzel(cfg);
  if (name == "modified-torus") return suite_modified();
  if (name == "whitehead") return suite_whitehead(cfg);
  if (name == "tangle-ext") return suite_tangle();
  throw Error(Errc::invalid_parameter, "unknown suite '" + std::string(name) + "'");
}

}  // namespace altdist::cli
