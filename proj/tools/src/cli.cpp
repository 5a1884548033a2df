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

#include "altdist_cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

#include "altdist/braid.hpp"
#include "altdist/error.hpp"
#include "altdist/families.hpp"
#include "altdist/parse.hpp"
#include "altdist/report.hpp"
#include "altdist/signature.hpp"
#include "altdist/warping.hpp"
#include "altdist_cli/reproduce.hpp"

namespace altdist::cli {

namespace {

using nlohmann::json;

constexpr const char* kFooter = R"(CSV columns:
  invariants  name,crossings,components,writhe,alternating,dalt,turaev_genus,warp,jones_span,signature,kh_width
  report      distance,lower,upper,lower_source,upper_source
  family      quantity,lower,upper,citation
  warp        name,warp,component_warps
  signature   name,signature
  reproduce   suite,result,citation,claim,detail
Empty CSV cells mark values that were skipped (disconnected diagram or cap).
Upper bound "inf" means no finite bound is known.

Input files hold one diagram per line, optionally prefixed by "name:".
  PD form:    X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)
  braid form: BR(3): 1 -2 1 -2
Lines starting with '#' are comments.

Exit codes: 0 ok, 1 computation error, 2 usage error, 3 reproduce failure.)";

struct Options {
  std::string format;
  int bracket_cap = 20;
  int kh_cap = 14;
  int jobs = 1;
  std::string file;
  std::string facts;
  std::string name;
  std::string family;
  std::vector<std::string> params;
  int twists = 0;
  std::string suite;
};

ReportConfig report_config(const Options& o) {
  ReportConfig cfg;
  cfg.bracket_cap = o.bracket_cap;
  cfg.khovanov_cap = o.kh_cap;
  cfg.jobs = o.jobs;
  return cfg;
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

template <class T>
std::string opt_str(const std::optional<T>& v, const char* missing) {
  if (!v) return missing;
  if constexpr (std::is_same_v<T, Rational>) {
    return v->str();
  } else {
    return std::to_string(*v);
  }
}

json json_number(const Rational& v) {
  if (v.is_integer()) return v.num();
  return v.to_double();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::empty_input, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<int> parse_ints(const std::vector<std::string>& parts) {
  std::vector<int> out;
  for (const auto& part : parts) {
    std::stringstream ss(part);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(item, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != item.size()) throw Error(Errc::invalid_parameter, "bad integer '" + item + "'");
      out.push_back(v);
    }
  }
  return out;
}

/// "torus:3,4" style.
FamilyFacts parse_facts(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw Error(Errc::invalid_parameter, "facts must look like FAMILY:P,Q");
  return known_values(parse_family(text.substr(0, colon)), parse_ints({text.substr(colon + 1)}));
}

std::string braid_text(const BraidWord& w) {
  std::string s = "BR(" + std::to_string(w.strands) + "):";
  for (int l : w.letters) s += ' ' + std::to_string(l);
  return s;
}

// ---------------------------------------------------------------- invariants

int cmd_invariants(const Options& o, std::ostream& out) {
  const auto parsed = parse_diagram_file(read_file(o.file));
  if (parsed.empty()) throw Error(Errc::empty_input, "no diagrams in " + o.file);
  std::vector<PlanarDiagram> ds;
  std::vector<std::string> names;
  for (const auto& nd : parsed) {
    ds.push_back(nd.diagram);
    names.push_back(nd.name);
  }
  const auto rows = summarize_all(ds, report_config(o), names);
  const std::string fmt = o.format.empty() ? "text" : o.format;
  if (fmt == "json") {
    out << summaries_to_json(rows) << '\n';
  } else if (fmt == "csv") {
    out << "name,crossings,components,writhe,alternating,dalt,turaev_genus,warp,jones_span,signature,"
           "kh_width\n";
    for (const auto& r : rows)
      out << csv_cell(r.name) << ',' << r.crossings << ',' << r.components << ',' << r.writhe << ','
          << (r.alternating ? "true" : "false") << ',' << r.dalt << ',' << opt_str(r.turaev_genus, "")
          << ',' << r.warp.str() << ',' << opt_str(r.jones_span, "") << ','
          << opt_str(r.signature, "") << ',' << opt_str(r.kh_width, "") << '\n';
  } else {
    std::size_t w = 4;
    for (const auto& r : rows) w = std::max(w, r.name.size());
    w = std::min<std::size_t>(w, 40);
    out << std::left << std::setw(static_cast<int>(w)) << "name" << std::right << std::setw(5) << "c"
        << std::setw(4) << "#L" << std::setw(5) << "w" << std::setw(5) << "alt" << std::setw(6)
        << "dalt" << std::setw(5) << "g_T" << std::setw(6) << "warp" << std::setw(6) << "span"
        << std::setw(6) << "sigma" << std::setw(6) << "w(Kh)" << '\n';
    for (const auto& r : rows)
      out << std::left << std::setw(static_cast<int>(w)) << r.name.substr(0, w) << std::right
          << std::setw(5) << r.crossings << std::setw(4) << r.components << std::setw(5) << r.writhe
          << std::setw(5) << (r.alternating ? "yes" : "no") << std::setw(6) << r.dalt << std::setw(5)
          << opt_str(r.turaev_genus, "-") << std::setw(6) << r.warp.str() << std::setw(6)
          << opt_str(r.jones_span, "-") << std::setw(6) << opt_str(r.signature, "-") << std::setw(6)
          << opt_str(r.kh_width, "-") << '\n';
  }
  return exit_ok;
}

// -------------------------------------------------------------------- report

int cmd_report(const Options& o, std::ostream& out, std::ostream& err) {
  const auto parsed = parse_diagram_file(read_file(o.file));
  std::optional<FamilyFacts> facts;
  if (!o.facts.empty()) facts = parse_facts(o.facts);
  if (parsed.empty() && !facts) throw Error(Errc::empty_input, "no diagrams in " + o.file);
  std::vector<PlanarDiagram> ds;
  std::vector<std::string> names;
  for (const auto& nd : parsed) {
    ds.push_back(nd.diagram);
    names.push_back(nd.name);
  }
  const std::string link = !o.name.empty() ? o.name : !o.facts.empty() ? o.facts : o.file;
  const DistanceReport r = compute_report(link, ds, facts, report_config(o), names);

  const std::pair<const char*, const BoundInterval*> rows[] = {
      {"alt", &r.alt},     {"dalt", &r.dalt}, {"turaev_genus", &r.turaev_genus}, {"alt_genus", &r.alt_genus},
      {"warp", &r.warp},   {"c_minus_span", &r.c_minus_span}};
  const std::string fmt = o.format.empty() ? "json" : o.format;
  if (fmt == "json") {
    out << r.to_json() << '\n';
  } else if (fmt == "csv") {
    out << "distance,lower,upper,lower_source,upper_source\n";
    for (const auto& [key, b] : rows)
      out << key << ',' << b->lower.str() << ',' << ext_str(b->upper) << ',' << csv_cell(b->lower_source)
          << ',' << csv_cell(b->upper_source) << '\n';
  } else {
    out << "link: " << r.link << "\nstatus: " << to_string(r.status) << '\n';
    for (const auto& [key, b] : rows)
      out << std::left << std::setw(14) << key << "[" << b->lower.str() << ", " << ext_str(b->upper)
          << "]  (" << b->lower_source << " / " << b->upper_source << ")\n";
  }
  const auto bad = check_consistency(r);
  for (const auto& v : bad) err << "inconsistent: " << v << '\n';
  return bad.empty() ? exit_ok : exit_computation;
}

// -------------------------------------------------------------------- family

int cmd_family(const Options& o, std::ostream& out) {
  const FamilyTag tag = parse_family(o.family);
  const std::vector<int> params = parse_ints(o.params);
  std::optional<BraidWord> braid;
  std::optional<PlanarDiagram> diagram;
  std::optional<bool> toroidal;
  std::vector<int> flips;
  switch (tag) {
    case FamilyTag::torus:
    case FamilyTag::modified_torus: {
      if (params.size() != 2) throw Error(Errc::invalid_parameter, "expected two parameters P Q");
      const int p = params[0], q = params[1];
      braid = tag == FamilyTag::torus ? torus_braid(p, q) : modified_torus_braid(p, q);
      if (tag == FamilyTag::modified_torus) {
        flips = letter_sign_flips(torus_braid(p, q), *braid);
        toroidal = toroidal_alternating_check(p, q);
      }
      diagram = braid_closure(*braid);
      break;
    }
    case FamilyTag::whitehead: {
      if (params.size() != 1) throw Error(Errc::invalid_parameter, "expected one parameter N");
      const int n = params[0];
      if (n < 0) throw Error(Errc::invalid_parameter, "N must be non-negative");
      // W_0 is the figure-eight; beyond W_1 the diagrams are too large to be useful.
      if (n <= 1) {
        PlanarDiagram d = braid_closure({3, {1, -2, 1, -2}});
        diagram = n == 0 ? d : whitehead_double(d, o.twists);
      }
      break;
    }
  }
  FamilyFacts facts{tag, params, {}};
  // Cited values cover untwisted doubles only.
  if (tag != FamilyTag::whitehead || o.twists == 0) {
    try {
      facts = known_values(tag, params);
    } catch (const Error& e) {
      if (e.code() != Errc::invalid_parameter) throw;
    }
  }

  const std::string fmt = o.format.empty() ? "json" : o.format;
  if (fmt == "json") {
    json f = json::object();
    for (const auto& [q, b] : facts.values)
      f[std::string(to_string(q))] = {{"lower", json_number(b.lower)},
                                      {"upper", b.upper ? json_number(*b.upper) : json(nullptr)},
                                      {"citation", b.citation}};
    json j = {{"family", std::string(to_string(tag))},
              {"params", params},
              {"braid", braid ? json(braid_text(*braid)) : json(nullptr)},
              {"pd", diagram ? json(diagram->to_pd()) : json(nullptr)},
              {"facts", f}};
    if (toroidal) {
      j["sign_flips"] = flips;
      j["toroidal_check"] = *toroidal;
    }
    out << j.dump() << '\n';
  } else if (fmt == "csv") {
    out << "quantity,lower,upper,citation\n";
    for (const auto& [q, b] : facts.values)
      out << to_string(q) << ',' << b.lower.str() << ',' << ext_str(b.upper) << ',' << csv_cell(b.citation)
          << '\n';
  } else {
    out << "family: " << to_string(tag) << '\n';
    if (braid) out << "braid: " << braid_text(*braid) << '\n';
    if (diagram) out << "pd: " << diagram->to_pd() << '\n';
    if (toroidal) out << "toroidal check: " << (*toroidal ? "passes" : "fails") << '\n';
    for (const auto& [q, b] : facts.values)
      out << std::left << std::setw(16) << to_string(q) << '[' << b.lower.str() << ", " << ext_str(b.upper)
          << "]  " << b.citation << '\n';
  }
  return exit_ok;
}

// ------------------------------------------------------- warp and signature

std::vector<NamedDiagram> load_diagrams(const std::string& file) {
  auto parsed = parse_diagram_file(read_file(file));
  if (parsed.empty()) throw Error(Errc::empty_input, "no diagrams in " + file);
  return parsed;
}

int cmd_warp(const Options& o, std::ostream& out) {
  const std::string fmt = o.format.empty() ? "text" : o.format;
  json all = json::array();
  if (fmt == "csv") out << "name,warp,component_warps\n";
  for (const auto& nd : load_diagrams(o.file)) {
    const PlanarDiagram& d = nd.diagram;
    std::vector<Rational> per;
    for (int k = 0; k < static_cast<int>(d.components().size()); ++k) per.push_back(component_warp(d, k));
    const Rational w = warping_span_diagram(d);
    std::string list;
    for (const auto& x : per) list += (list.empty() ? "" : " ") + x.str();
    if (fmt == "json") {
      json ks = json::array();
      for (const auto& x : per) ks.push_back(json_number(x));
      all.push_back({{"name", nd.name}, {"warp", json_number(w)}, {"component_warps", ks}});
    } else if (fmt == "csv") {
      out << csv_cell(nd.name) << ',' << w.str() << ',' << list << '\n';
    } else {
      out << nd.name << ": warp " << w.str() << "  components [" << list << "]\n";
    }
  }
  if (fmt == "json") out << all.dump() << '\n';
  return exit_ok;
}

int cmd_signature(const Options& o, std::ostream& out) {
  const std::string fmt = o.format.empty() ? "text" : o.format;
  json all = json::array();
  if (fmt == "csv") out << "name,signature\n";
  for (const auto& nd : load_diagrams(o.file)) {
    const int sigma = goeritz_signature(nd.diagram);
    if (fmt == "json") {
      all.push_back({{"name", nd.name}, {"signature", sigma}});
    } else if (fmt == "csv") {
      out << csv_cell(nd.name) << ',' << sigma << '\n';
    } else {
      out << nd.name << ": signature " << sigma << '\n';
    }
  }
  if (fmt == "json") out << all.dump() << '\n';
  return exit_ok;
}

// ----------------------------------------------------------------- reproduce

int cmd_reproduce(const Options& o, std::ostream& out) {
  std::vector<Claim> claims;
  if (o.suite == "all") {
    for (const auto& s : suite_names()) {
      auto c = run_suite(s, report_config(o));
      claims.insert(claims.end(), c.begin(), c.end());
    }
  } else {
    claims = run_suite(o.suite, report_config(o));
  }
  const bool ok = std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.pass; });
  const std::string fmt = o.format.empty() ? "text" : o.format;
  if (fmt == "json") {
    json a = json::array();
    for (const auto& c : claims)
      a.push_back({{"suite", c.suite},
                   {"claim", c.statement},
                   {"citation", c.citation},
                   {"pass", c.pass},
                   {"detail", c.detail}});
    out << a.dump() << '\n';
  } else if (fmt == "csv") {
    out << "suite,result,citation,claim,detail\n";
    for (const auto& c : claims)
      out << c.suite << ',' << (c.pass ? "PASS" : "FAIL") << ',' << csv_cell(c.citation) << ','
          << csv_cell(c.statement) << ',' << csv_cell(c.detail) << '\n';
  } else {
    for (const auto& c : claims) {
      out << (c.pass ? "PASS " : "FAIL ") << c.statement << "  [" << c.citation << ']';
      if (!c.detail.empty()) out << "  (" << c.detail << ')';
      out << '\n';
    }
  }
  return ok ? exit_ok : exit_reproduce;
}

int default_jobs() {
  const unsigned hw = std::thread::hardware_concurrency();
  return static_cast<int>(std::clamp(hw, 1u, 8u));
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Alternating distance bounds for link diagrams", "altdist"};
  app.footer(kFooter);
  app.fallthrough();
  app.require_subcommand(1);

  Options o;
  o.jobs = default_jobs();
  app.add_option("--format", o.format, "Output format (json|csv|text)")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--bracket-cap", o.bracket_cap, "Crossing cap for bracket state sums")
      ->check(CLI::Range(1, 30))
      ->capture_default_str();
  app.add_option("--kh-cap", o.kh_cap, "Crossing cap for Khovanov homology")
      ->check(CLI::Range(1, 24))
      ->capture_default_str();
  app.add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1, 1024))->capture_default_str();

  auto* inv = app.add_subcommand("invariants", "Per-diagram invariants (default format text)");
  inv->add_option("file", o.file, "Diagram file")->required();

  auto* rep = app.add_subcommand("report", "Distance bounds for one link (default format json)");
  rep->add_option("file", o.file, "Diagrams of the link")->required();
  rep->add_option("--facts", o.facts, "Cited family values, FAMILY:P,Q");
  rep->add_option("--name", o.name, "Link identifier in the output");

  auto* fam = app.add_subcommand("family", "Family braid, diagram and cited values (default format json)");
  fam->add_option("family", o.family, "torus|modified|whitehead")->required();
  fam->add_option("params", o.params, "P Q, or N for whitehead")->required();
  fam->add_option("--twists", o.twists, "Twisting of the outer Whitehead double")->capture_default_str();

  auto* warp = app.add_subcommand("warp", "Warping span per diagram (default format text)");
  warp->add_option("file", o.file, "Diagram file")->required();

  auto* sig = app.add_subcommand("signature", "Signature per connected diagram (default format text)");
  sig->add_option("file", o.file, "Diagram file")->required();

  auto* repro = app.add_subcommand("reproduce", "Run a reproduction suite (default format text)");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  repro->add_option("suite", o.suite, "Suite name")->required()->check(CLI::IsMember(suites));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*inv) return cmd_invariants(o, out);
    if (*rep) return cmd_report(o, out, err);
    if (*fam) return cmd_family(o, out);
    if (*warp) return cmd_warp(o, out);
    if (*sig) return cmd_signature(o, out);
    return cmd_reproduce(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == Errc::unsupported_family ? exit_usage : exit_computation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_computation;
  }
}

}  // namespace altdist::cli
