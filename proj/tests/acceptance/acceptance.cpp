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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "altdist/alternation.hpp"
#include "altdist/bracket.hpp"
#include "altdist/braid.hpp"
#include "altdist/error.hpp"
#include "altdist/families.hpp"
#include "altdist/homology.hpp"
#include "altdist/report.hpp"
#include "altdist/signature.hpp"
#include "altdist/turaev.hpp"
#include "altdist/warping.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace altdist;

namespace {

/// Collects the first failure message; later checks still run.
class Check {
 public:
  void operator()(bool ok, const std::string& what) {
    ++count_;
    if (!ok && failure_.empty()) failure_ = what;
  }
  bool ok() const { return failure_.empty(); }
  std::string detail() const {
    return ok() ? std::to_string(count_) + " checks" : failure_;
  }

 private:
  int count_ = 0;
  std::string failure_;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

PlanarDiagram t3(int q) { return braid_closure(torus_braid(3, q)); }

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

// 1. Jones polynomial of the T(3,q) closures.
Check jones_formula() {
  Check c;
  const auto t0 = Clock::now();
  for (int q : {4, 5, 7, 8}) {
    LaurentPolynomial want(Variable::t);
    want.add_term(4 * (q - 1), 1);
    want.add_term(4 * (q + 1), 1);
    want.add_term(8 * q, -1);
    const LaurentPolynomial v = jones_polynomial(t3(q));
    c(v == want, "T(3," + std::to_string(q) + "): " + v.str());
  }
  const double s = seconds_since(t0);
  c(s < 5.0, "runtime " + fmt_seconds(s));
  return c;
}

// 2. c - span with the cited crossing number.
Check c_minus_span() {
  Check c;
  for (int q : {4, 5, 7, 8}) {
    const FamilyFacts f = known_values(FamilyTag::torus, {3, q});
    const CitedBound* cn = f.find(Quantity::crossing_number);
    c(cn && cn->exact() && cn->lower == Rational(2 * q), "cited c(T(3,q)) = 2q");
    const Rational cms = cn->lower - jones_span(t3(q));
    c(cms == Rational(q - 1), "T(3," + std::to_string(q) + "): c - span = " + cms.str());
    const DistanceReport r = compute_report("T", {t3(q)}, f);
    c(r.c_minus_span.exact() && r.c_minus_span.lower == Rational(q - 1), "report c - span not exact");
  }
  return c;
}

// 3. Signature recursion, closed form and Goeritz forms agree.
Check signatures() {
  Check c;
  int pairs = 0;
  for (int p = 2; p <= 7; ++p)
    for (int q = p + 1; q <= 7; ++q) {
      if (std::gcd(p, q) != 1) continue;
      ++pairs;
      const int g = goeritz_signature(braid_closure(torus_braid(p, q)));
      const int r = torus_signature_recursive(p, q);
      c(g == r, "sigma T(" + std::to_string(p) + "," + std::to_string(q) + "): Goeritz " + std::to_string(g) +
                    " recursion " + std::to_string(r));
    }
  c(pairs == 11, "coprime pair count " + std::to_string(pairs));
  for (int p = 2; p <= 8; ++p)
    for (int n = 0; n <= 4; ++n)
      for (int r = 1; r < p; ++r)
        c(torus_signature_closed(p, n, r) == torus_signature_recursive(p, n * p + r),
          "closed form at p=" + std::to_string(p) + " n=" + std::to_string(n) + " r=" + std::to_string(r));
  for (int q = 3; q <= 9; q += 2) {
    c(goeritz_signature(braid_closure(torus_braid(2, q))) == 1 - q, "sigma T(2," + std::to_string(q) + ")");
    c(torus_signature_recursive(2, q) == 1 - q, "recursive sigma T(2," + std::to_string(q) + ")");
  }
  return c;
}

// 4. Khovanov widths with the dense oracle on the small cases.
Check khovanov_widths() {
  Check c;
  const auto t0 = Clock::now();
  struct Case {
    const char* name;
    PlanarDiagram d;
    int width;
  };
  const std::vector<Case> cases = {
      {"unknot", PlanarDiagram::unknot(), 2},
      {"trefoil", braid_closure({2, {1, 1, 1}}), 2},
      {"figure-eight", braid_closure({3, {1, -2, 1, -2}}), 2},
      {"T(2,5)", braid_closure(torus_braid(2, 5)), 2},
      {"T(3,4)", t3(4), 3},
      {"T(3,5)", t3(5), 3},
  };
  for (const auto& k : cases) {
    const BigradedDimensions kh = khovanov_f2(k.d);
    const int w = kh_delta_width(kh);
    c(w == k.width, std::string(k.name) + ": width " + std::to_string(w));
    if (k.d.crossing_count() <= 10) c(kh.dims == oracle::khovanov(k.d), std::string(k.name) + ": oracle mismatch");
  }
  for (int q : {4, 5}) {
    const DistanceReport r = compute_report("T", {t3(q)}, known_values(FamilyTag::torus, {3, q}));
    c(r.kh_width && *r.kh_width - 2 == 1, "w(Kh) - 2 for T(3,q)");
    const CitedBound* g = known_values(FamilyTag::torus, {3, q}).find(Quantity::turaev_genus);
    c(g && g->exact() && g->lower == Rational(*r.kh_width - 2), "cited g_T differs from width bound");
  }
  // A 14-crossing diagram at the cap.
  const PlanarDiagram t37 = t3(7);
  c(t37.crossing_count() == 14, "T(3,7) diagram size");
  c(kh_delta_width(khovanov_f2(t37)) - 2 <= turaev_genus_diagram(t37), "T(3,7) width bound");
  const double s = seconds_since(t0);
  c(s < 60.0, "runtime " + fmt_seconds(s));
  return c;
}

// 5. Warping span.
Check warping() {
  Check c;
  for (int q : {4, 5, 7, 8}) c(warping_span_diagram(t3(q)) == Rational(1, 2), "warp T(3,q)");
  c(warping_span_diagram(braid_closure({2, {-1, 1, -1, 1, -1}})) == Rational(2), "warp of the 5-crossing unknot");
  int alternating = 0;
  for (const auto& nd : testing_corpus::load()) {
    const PlanarDiagram& d = nd.diagram;
    const Rational w = warping_span_diagram(d);
    if (is_alternating(d)) {
      ++alternating;
      c(w == Rational(0), nd.name + ": alternating with warp " + w.str());
    }
    c(w == oracle::warp(d), nd.name + ": warp differs from oracle");
    if (d.crossing_count() > 10) continue;
    const auto comps = d.components();
    for (int k = 0; k < static_cast<int>(comps.size()); ++k) {
      const Rational wk = component_warp(d, k);
      for (int e : comps[k])
        for (bool rev : {false, true}) {
          const Rational v = traversal_warp(edge_weights(d, k, e, rev));
          // Knots: every choice agrees. Links: the component value is the largest.
          if (d.component_count() == 1)
            c(v == wk, nd.name + ": base edge " + std::to_string(e) + " changes warp");
          else
            c(v <= wk, nd.name + ": traversal above component warp");
        }
    }
  }
  c(alternating >= 15, "too few alternating corpus diagrams");
  return c;
}

// 6. The (5,-3,2) pretzel diagram.
Check pretzel() {
  Check c;
  const PlanarDiagram d = pretzel_diagram({5, -3, 2});
  const int dalt = dealternating_number_diagram(d);
  const Rational span = jones_span(d);
  c(d.crossing_count() == 10, "c(D) = " + std::to_string(d.crossing_count()));
  c(dalt == 3, "dalt(D) = " + std::to_string(dalt));
  c(dalt == oracle::brute_force_dalt(d), "dalt differs from exhaustive search");
  c(span == Rational(8), "span = " + span.str());
  c(Rational(dalt) > Rational(d.crossing_count()) - span, "strict inequality");
  return c;
}

// 7. Modified torus signature intervals.
Check modified_bounds() {
  Check c;
  for (int p = 3; p <= 7; ++p)
    for (int q = 3; q <= 7; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const std::string tag = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
      const ModifiedTorusBounds b = modified_torus_bounds(p, q);
      const int sm = goeritz_signature(braid_closure(modified_torus_braid(p, q)));
      const int st = goeritz_signature(braid_closure(torus_braid(p, q)));
      c(b.sigma_modified.contains(Rational(sm)), "modified " + tag + ": " + std::to_string(sm));
      c(b.sigma_torus.contains(Rational(st)), "torus " + tag + ": " + std::to_string(st));
    }
  return c;
}

// 8. Whitehead doubles.
Check whitehead() {
  Check c;
  for (int n = 1; n <= 6; ++n) {
    const std::string tag = "W_" + std::to_string(n);
    c(hfk_width(hfk_whitehead_dims(n)) == n + 1, tag + ": HFK width");
    const DistanceReport r = compute_report(tag, {}, known_values(FamilyTag::whitehead, {n}));
    c(r.turaev_genus.lower >= Rational(n), tag + ": g_T lower " + r.turaev_genus.lower.str());
    c(r.alt.exact() && r.alt.lower == Rational(1), tag + ": alt interval");
    c(r.alt.upper && r.turaev_genus.lower - *r.alt.upper >= Rational(n - 1), tag + ": gap");
    c(check_consistency(r).empty(), tag + ": inconsistent report");
  }
  return c;
}

// 9. Tangle extensions.
Check tangles() {
  Check c;
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> strands(3, 4), len(3, 9), coin(0, 1), size(1, 7);
  int triples = 0;
  while (triples < 150) {
    BraidWord w;
    w.strands = strands(rng);
    std::uniform_int_distribution<int> gen(1, w.strands - 1);
    const int n = len(rng);
    for (int i = 0; i < n; ++i) w.letters.push_back(coin(rng) ? gen(rng) : -gen(rng));
    const PlanarDiagram d = braid_closure(w);
    if (!d.is_connected()) continue;
    ++triples;
    std::uniform_int_distribution<int> pick(0, d.crossing_count() - 1);
    const int k = pick(rng);
    const Tangle tau = random_alternating_tangle(size(rng), rng);
    c(is_alternating_tangle(tau) && tangle_extends_crossing(tau), "random tangle " + tau.str());
    const PlanarDiagram e = tangle_extend(d, k, tau);
    c(state_sum_excess(e) == state_sum_excess(d), "excess changed");
    c(turaev_genus_diagram(e) == turaev_genus_diagram(d), "g_T changed");
    c(oracle::turaev_genus(e) == oracle::turaev_genus(d), "oracle g_T changed");
  }
  const PlanarDiagram p = pretzel_diagram({5, -3, 2});
  const int k = dealternating_number_diagram(p);
  const auto pieces = alternating_assignments_by_piece(p);
  const int x = pieces[0].flip.front();
  for (int n = 1; n <= 7; ++n) {
    const PlanarDiagram e = tangle_extend(p, x, twist_tangle(n));
    const int want = std::min(p.crossing_count() - k, n + k - 1);
    c(dealternating_number_diagram(e) == want, "witness n=" + std::to_string(n));
    c(oracle::brute_force_dalt(e) == want, "witness oracle n=" + std::to_string(n));
  }
  return c;
}

// 10. Inequality lattice over the corpus.
Check lattice() {
  Check c;
  std::map<std::string, std::vector<PlanarDiagram>> links;
  for (const auto& nd : testing_corpus::load()) {
    const PlanarDiagram& d = nd.diagram;
    c(d.crossing_count() <= 12, nd.name + ": too many crossings");
    links[testing_corpus::link_of(nd.name)].push_back(d);
    const int dalt = dealternating_number_diagram(d);
    c(warping_span_diagram(d) <= Rational(dalt), nd.name + ": warp > dalt");
    if (!d.is_connected()) continue;
    const int g = turaev_genus_diagram(d);
    c(g <= dalt, nd.name + ": g_T > dalt");
    c(Rational(g) <= Rational(d.crossing_count()) - jones_span(d), nd.name + ": g_T > c - span");
    c(kh_delta_width(khovanov_f2(d)) - 2 <= g, nd.name + ": w(Kh) - 2 > g_T");
  }
  for (const auto& [name, ds] : links) {
    const auto bad = check_consistency(compute_report(name, ds));
    c(bad.empty(), name + ": " + (bad.empty() ? "" : bad.front()));
  }
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria = {
      {"Jones polynomial of T(3,q) closures", jones_formula},
      {"c - span of T(3,q)", c_minus_span},
      {"torus signature recursion, closed form and Goeritz", signatures},
      {"Khovanov delta-widths", khovanov_widths},
      {"warping span", warping},
      {"(5,-3,2) pretzel diagram", pretzel},
      {"modified torus signature intervals", modified_bounds},
      {"Whitehead double widths and gap", whitehead},
      {"tangle extension invariants", tangles},
      {"inequality lattice over the corpus", lattice},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = Clock::now();
    bool ok = false;
    std::string detail;
    try {
      const Check c = criteria[i].second();
      ok = c.ok();
      detail = c.detail();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    failed += !ok;
    std::printf("%s %zu %s (%s, %s)\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), detail.c_str(),
                fmt_seconds(seconds_since(t0)).c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
