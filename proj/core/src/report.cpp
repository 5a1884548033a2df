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

#include "altdist/report.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

#include <json.hpp>

#include "altdist/alternation.hpp"
#include "altdist/bracket.hpp"
#include "altdist/error.hpp"
#include "altdist/homology.hpp"
#include "altdist/signature.hpp"
#include "altdist/turaev.hpp"
#include "altdist/warping.hpp"

namespace altdist {

using nlohmann::json;

void BoundInterval::raise(const Rational& v, const std::string& source) {
  if (v > lower) {
    lower = v;
    lower_source = source;
  }
}

void BoundInterval::cap(const ExtendedRational& v, const std::string& source) {
  if (ext_less(v, upper)) {
    upper = v;
    upper_source = source;
  }
}

std::string_view to_string(AlternationStatus s) noexcept {
  switch (s) {
    case AlternationStatus::alternating: return "alternating";
    case AlternationStatus::non_alternating: return "non-alternating";
    case AlternationStatus::unknown: return "unknown";
  }
  return "?";
}

DiagramSummary summarize_diagram(const PlanarDiagram& d, const ReportConfig& cfg, std::string name) {
  DiagramSummary s;
  s.name = std::move(name);
  s.crossings = d.crossing_count();
  s.components = d.component_count();
  s.writhe = writhe(d);
  s.alternating = is_alternating(d);
  s.connected = d.is_connected();
  s.dalt = dealternating_number_diagram(d);
  s.warp = warping_span_diagram(d);
  if (s.connected) {
    s.turaev_genus = turaev_genus_diagram(d);
    s.signature = goeritz_signature(d);
  }
  if (s.crossings <= cfg.bracket_cap) {
    BracketConfig bc;
    bc.crossing_cap = cfg.bracket_cap;
    LaurentPolynomial v = jones_polynomial(d, bc);
    s.jones = v.str();
    s.jones_span = v.span();
  }
  if (s.crossings <= cfg.khovanov_cap) {
    KhovanovConfig kc;
    kc.crossing_cap = cfg.khovanov_cap;
    s.kh_width = kh_delta_width(khovanov_f2(d, kc));
  }
  return s;
}

std::vector<DiagramSummary> summarize_all(const std::vector<PlanarDiagram>& diagrams,
                                          const ReportConfig& cfg,
                                          const std::vector<std::string>& names) {
  const std::size_t n = diagrams.size();
  std::vector<DiagramSummary> out(n);
  auto name_of = [&](std::size_t i) {
    return i < names.size() ? names[i] : "diagram " + std::to_string(i + 1);
  };
  const std::size_t jobs = std::clamp<std::size_t>(cfg.jobs < 1 ? 1 : cfg.jobs, 1, std::max<std::size_t>(n, 1));
  if (jobs == 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = summarize_diagram(diagrams[i], cfg, name_of(i));
    return out;
  }
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < jobs; ++t)
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < n; i += jobs) out[i] = summarize_diagram(diagrams[i], cfg, name_of(i));
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

namespace {

/// Smallest |x| over x in [lo, hi].
Rational min_abs(const Rational& lo, const Rational& hi) {
  if (lo > Rational(0)) return lo;
  if (hi < Rational(0)) return -hi;
  return Rational(0);
}

}  // namespace

DistanceReport compute_report(const std::string& link, const std::vector<PlanarDiagram>& diagrams,
                              const std::optional<FamilyFacts>& facts, const ReportConfig& cfg,
                              const std::vector<std::string>& names) {
  if (diagrams.empty() && !facts)
    throw Error(Errc::empty_input, "report needs a diagram or family facts");
  DistanceReport r;
  r.link = link;
  r.diagrams = summarize_all(diagrams, cfg, names);

  const DiagramSummary* with_jones = nullptr;
  for (const auto& s : r.diagrams) {
    if (!s.jones) continue;
    if (with_jones && *with_jones->jones != *s.jones)
      throw Error(Errc::jones_mismatch, "Jones polynomials of '" + with_jones->name + "' and '" +
                                            s.name + "' differ");
    if (!with_jones) with_jones = &s;
  }

  auto fact = [&](Quantity q) -> const CitedBound* { return facts ? facts->find(q) : nullptr; };
  auto apply_fact = [&](BoundInterval& b, Quantity q) {
    if (const CitedBound* f = fact(q)) {
      b.raise(f->lower, f->citation);
      b.cap(f->upper, f->citation);
    }
  };

  // Auxiliary data.
  if (with_jones) {
    r.jones_span = with_jones->jones_span;
  } else if (const CitedBound* f = fact(Quantity::jones_span); f && f->exact()) {
    r.jones_span = f->lower;
  }
  bool any_connected = false;
  for (const auto& s : r.diagrams) any_connected |= s.connected;
  // Width and signature bounds assume a non-split link; a split projection
  // alone gives no such guarantee, so they are only used alongside a
  // connected diagram or cited data.
  const bool use_homology = any_connected || diagrams.empty();
  for (const auto& s : r.diagrams)
    if (use_homology && s.connected && s.kh_width)
      r.kh_width = std::max(r.kh_width.value_or(0), *s.kh_width);
  if (const CitedBound* f = fact(Quantity::hfk_width); f && f->exact())
    r.hfk_width = static_cast<int>(f->lower.num());
  // Every family in the facts table is a knot within its cited range.
  const bool knot = diagrams.empty() || r.diagrams.front().components == 1;
  for (const auto& s : r.diagrams)
    if (knot && s.signature && !r.signature) r.signature = ClosedInterval{*s.signature, *s.signature};
  if (!r.signature)
    if (const CitedBound* f = fact(Quantity::signature); f && f->upper)
      r.signature = ClosedInterval{f->lower, *f->upper};
  if (const CitedBound* f = fact(Quantity::s_invariant); f && f->upper)
    r.s_invariant = ClosedInterval{f->lower, *f->upper};

  std::optional<Rational> s_sigma;  // lower bound for |s + sigma|
  if (knot && r.signature && r.s_invariant)
    s_sigma = min_abs(r.s_invariant->lo + r.signature->lo, r.s_invariant->hi + r.signature->hi);
  const Rational s_sigma_bound = s_sigma ? Rational((*s_sigma / Rational(2)).ceil()) : Rational(0);

  bool alternating = false;
  for (const auto& s : r.diagrams) alternating |= s.alternating;
  bool non_alternating = (r.kh_width && *r.kh_width > 2) || (r.hfk_width && *r.hfk_width > 1) ||
                         s_sigma_bound >= Rational(1);
  for (Quantity q : {Quantity::alt, Quantity::dalt, Quantity::turaev_genus, Quantity::alt_genus,
                     Quantity::warp})
    if (const CitedBound* f = fact(q); f && f->lower > Rational(0)) non_alternating = true;
  r.status = alternating       ? AlternationStatus::alternating
             : non_alternating ? AlternationStatus::non_alternating
                               : AlternationStatus::unknown;
  const bool certified_non_alt = non_alternating && !alternating;

  // Turaev genus.
  BoundInterval& gt = r.turaev_genus;
  for (const auto& s : r.diagrams)
    if (s.turaev_genus) gt.cap(Rational(*s.turaev_genus), "turaev_genus_diagram");
  apply_fact(gt, Quantity::turaev_genus);
  if (r.kh_width) gt.raise(Rational(*r.kh_width - 2), "khovanov_f2 width");
  if (r.hfk_width) gt.raise(Rational(*r.hfk_width - 1), "knot Floer width");
  if (s_sigma) gt.raise(s_sigma_bound, "s + signature");
  if (certified_non_alt) gt.raise(Rational(1), "non-alternating");

  // Alternating genus.
  BoundInterval& ga = r.alt_genus;
  apply_fact(ga, Quantity::alt_genus);
  if (certified_non_alt) ga.raise(Rational(1), "non-alternating");
  gt.raise(ga.lower, "alt_genus lower");

  // Alternation number.
  BoundInterval& alt = r.alt;
  apply_fact(alt, Quantity::alt);
  if (s_sigma) alt.raise(s_sigma_bound, "s + signature");
  if (certified_non_alt) alt.raise(Rational(1), "non-alternating");

  // Warping span.
  BoundInterval& warp = r.warp;
  for (const auto& s : r.diagrams) warp.cap(s.warp, "warping_span_diagram");
  apply_fact(warp, Quantity::warp);
  if (certified_non_alt) warp.raise(Rational(1, 2), "non-alternating");

  // Dealternating number.
  BoundInterval& dalt = r.dalt;
  for (const auto& s : r.diagrams) dalt.cap(Rational(s.dalt), "dealternating_number_diagram");
  apply_fact(dalt, Quantity::dalt);
  dalt.raise(gt.lower, "turaev_genus lower");
  dalt.raise(warp.lower, "warp lower");
  dalt.raise(alt.lower, "alt lower");

  // Crossing number minus span.
  BoundInterval& cms = r.c_minus_span;
  if (r.jones_span) {
    if (const CitedBound* f = fact(Quantity::crossing_number); f && f->exact()) {
      cms.raise(f->lower - *r.jones_span, f->citation);
      cms.cap(f->lower - *r.jones_span, f->citation);
    }
    // span <= c holds for connected diagrams only.
    for (const auto& s : r.diagrams)
      if (s.connected) cms.cap(Rational(s.crossings) - *r.jones_span, "crossings - span");
  }
  cms.raise(gt.lower, "turaev_genus lower");

  // Upper bounds passed down the lattice.
  gt.cap(cms.upper, "c_minus_span upper");
  gt.cap(dalt.upper, "dalt upper");
  alt.cap(dalt.upper, "dalt upper");
  warp.cap(dalt.upper, "dalt upper");
  ga.cap(gt.upper, "turaev_genus upper");
  return r;
}

namespace {

json number(const Rational& v) {
  if (v.is_integer()) return v.num();
  return v.to_double();
}

json number(const ExtendedRational& v) { return v ? number(*v) : json(nullptr); }

template <class T>
json maybe(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

json interval(const std::optional<ClosedInterval>& v) {
  if (!v) return nullptr;
  return json::array({number(v->lo), number(v->hi)});
}

json summary_json(const DiagramSummary& s) {
  return {{"name", s.name},
          {"crossings", s.crossings},
          {"components", s.components},
          {"writhe", s.writhe},
          {"alternating", s.alternating},
          {"dalt", s.dalt},
          {"turaev_genus", maybe(s.turaev_genus)},
          {"warp", number(s.warp)},
          {"jones", maybe(s.jones)},
          {"jones_span", s.jones_span ? number(*s.jones_span) : json(nullptr)},
          {"signature", maybe(s.signature)},
          {"kh_width", maybe(s.kh_width)}};
}

}  // namespace

std::string DiagramSummary::to_json() const { return summary_json(*this).dump(); }

std::string summaries_to_json(const std::vector<DiagramSummary>& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(summary_json(s));
  return out.dump();
}

std::string DistanceReport::to_json() const {
  json distances = json::object();
  auto put = [&](const char* key, const BoundInterval& b) {
    distances[key] = {{"lower", number(b.lower)},
                      {"upper", number(b.upper)},
                      {"provenance", {"lower: " + b.lower_source, "upper: " + b.upper_source}}};
  };
  put("alt", alt);
  put("dalt", dalt);
  put("turaev_genus", turaev_genus);
  put("alt_genus", alt_genus);
  put("warp", warp);
  put("c_minus_span", c_minus_span);

  json ds = json::array();
  for (const auto& s : diagrams) ds.push_back(summary_json(s));
  json aux = {{"status", std::string(to_string(status))},
              {"jones_span", jones_span ? number(*jones_span) : json(nullptr)},
              {"signature", interval(signature)},
              {"s", interval(s_invariant)},
              {"kh_width", maybe(kh_width)},
              {"hfk_width", maybe(hfk_width)},
              {"diagrams", ds}};
  json out = {{"link", link}, {"distances", distances}, {"aux", aux}};
  return out.dump();
}

std::vector<std::string> check_consistency(const DistanceReport& r) {
  std::vector<std::string> out;
  const std::pair<const char*, const BoundInterval*> all[] = {
      {"alt", &r.alt},   {"dalt", &r.dalt}, {"turaev_genus", &r.turaev_genus}, {"alt_genus", &r.alt_genus},
      {"warp", &r.warp}, {"c_minus_span", &r.c_minus_span}};
  for (auto [name, b] : all) {
    if (b->lower < Rational(0)) out.push_back(std::string(name) + ": negative lower bound " + b->lower.str());
    if (ext_less(b->upper, b->lower))
      out.push_back(std::string(name) + ": lower " + b->lower.str() + " exceeds upper " + ext_str(b->upper));
  }
  auto dominated = [&](const char* rel, const BoundInterval& small, const BoundInterval& big) {
    if (ext_less(big.upper, small.lower))
      out.push_back(std::string(rel) + ": lower " + small.lower.str() + " exceeds upper " + ext_str(big.upper));
  };
  dominated("alt <= dalt", r.alt, r.dalt);
  dominated("g_T <= c - span", r.turaev_genus, r.c_minus_span);
  dominated("g_T <= dalt", r.turaev_genus, r.dalt);
  dominated("g_alt <= g_T", r.alt_genus, r.turaev_genus);
  dominated("warp <= dalt", r.warp, r.dalt);
  auto bounded = [&](const char* rel, const Rational& value, const BoundInterval& big) {
    if (ext_less(big.upper, value))
      out.push_back(std::string(rel) + ": " + value.str() + " exceeds upper " + ext_str(big.upper));
  };
  if (r.kh_width) bounded("w(Kh) - 2 <= g_T", Rational(*r.kh_width - 2), r.turaev_genus);
  if (r.hfk_width) bounded("w(HFK) - 1 <= g_T", Rational(*r.hfk_width - 1), r.turaev_genus);
  if (r.signature && r.s_invariant) {
    Rational lo = r.s_invariant->lo + r.signature->lo, hi = r.s_invariant->hi + r.signature->hi;
    Rational m = min_abs(lo, hi);
    bounded("|s + sigma| <= 2 alt", m / Rational(2), r.alt);
    bounded("|s + sigma| <= 2 g_T", m / Rational(2), r.turaev_genus);
  }
  return out;
}

}  // namespace altdist
