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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "altdist/diagram.hpp"
#include "altdist/families.hpp"
#include "altdist/rational.hpp"

namespace altdist {

/// [lower, upper] with +infinity allowed above. Each endpoint names the
/// operation or citation that produced it.
struct BoundInterval {
  Rational lower;
  ExtendedRational upper;
  std::string lower_source = "definition";
  std::string upper_source = "none";

  bool exact() const { return upper && *upper == lower; }
  /// Raises the lower end when `v` is larger.
  void raise(const Rational& v, const std::string& source);
  /// Lowers the upper end when `v` is smaller.
  void cap(const ExtendedRational& v, const std::string& source);
};

struct ReportConfig {
  int bracket_cap = 20;
  int khovanov_cap = 14;
  int jobs = 1;
};

/// Diagram-level data; empty optionals mark quantities that were skipped
/// (disconnected diagram or crossing cap).
struct DiagramSummary {
  std::string name;
  int crossings = 0;
  int components = 0;
  int writhe = 0;
  bool alternating = false;
  bool connected = true;
  int dalt = 0;
  Rational warp;
  std::optional<int> turaev_genus;
  std::optional<std::string> jones;
  std::optional<Rational> jones_span;
  std::optional<int> signature;
  std::optional<int> kh_width;

  std::string to_json() const;
};

DiagramSummary summarize_diagram(const PlanarDiagram& d, const ReportConfig& cfg = {},
                                 std::string name = {});

/// Summaries in input order, spread over cfg.jobs threads. Unnamed entries
/// become "diagram N".
std::vector<DiagramSummary> summarize_all(const std::vector<PlanarDiagram>& diagrams,
                                          const ReportConfig& cfg = {},
                                          const std::vector<std::string>& names = {});

/// JSON array of summaries.
std::string summaries_to_json(const std::vector<DiagramSummary>& v);

enum class AlternationStatus { alternating, non_alternating, unknown };

std::string_view to_string(AlternationStatus s) noexcept;

struct DistanceReport {
  std::string link;
  BoundInterval alt, dalt, turaev_genus, alt_genus, warp, c_minus_span;

  AlternationStatus status = AlternationStatus::unknown;
  std::optional<Rational> jones_span;
  std::optional<ClosedInterval> signature;
  std::optional<ClosedInterval> s_invariant;
  std::optional<int> kh_width;
  std::optional<int> hfk_width;
  std::vector<DiagramSummary> diagrams;

  /// {"link", "distances": {name: {"lower","upper","provenance"}}, "aux"}.
  std::string to_json() const;
};

/// Interval bounds for one link from diagrams of it and optional cited facts.
/// Diagrams must share a Jones polynomial where it was computed.
DistanceReport compute_report(const std::string& link, const std::vector<PlanarDiagram>& diagrams,
                              const std::optional<FamilyFacts>& facts = std::nullopt,
                              const ReportConfig& cfg = {},
                              const std::vector<std::string>& names = {});

/// One message per violated relation between intervals or auxiliary data.
std::vector<std::string> check_consistency(const DistanceReport& r);

}  // namespace altdist
