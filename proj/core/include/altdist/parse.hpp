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

#include <string>
#include <string_view>
#include <vector>

#include "altdist/braid.hpp"
#include "altdist/diagram.hpp"

namespace altdist {

/// Whitespace separated X(a,b,c,d) terms with positive labels.
PlanarDiagram parse_pd(std::string_view text);

/// "BR(p): i1 i2 ..." ; brackets and commas between letters are accepted.
BraidWord parse_braid(std::string_view text);

struct NamedDiagram {
  std::string name;
  std::string source;
  PlanarDiagram diagram;
};

/// One input line: optional "name :" prefix, then PD or braid text.
NamedDiagram parse_diagram_line(std::string_view line);

/// Parses a whole file body. Blank lines and '#' comments are skipped; parse
/// errors are rethrown with "line N: " prepended.
std::vector<NamedDiagram> parse_diagram_file(std::string_view text);

}  // namespace altdist
