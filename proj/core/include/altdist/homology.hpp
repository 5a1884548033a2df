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

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "altdist/diagram.hpp"

namespace altdist {

enum class GradingScheme {
  /// Pairs (i, j): homological and quantum grading; delta = j - 2i.
  khovanov,
  /// Pairs (m, s): Maslov and Alexander grading; delta = s - m.
  knot_floer,
};

/// Nonzero dimensions indexed by a bigrading pair.
struct BigradedDimensions {
  GradingScheme scheme = GradingScheme::khovanov;
  int components = 1;
  std::map<std::pair<int, int>, std::int64_t> dims;

  std::int64_t total() const;
  /// {"gradings":[[a,b,dim],...]} in lexicographic order.
  std::string to_json() const;
  friend bool operator==(const BigradedDimensions&, const BigradedDimensions&) = default;
};

int delta_grading(GradingScheme scheme, std::pair<int, int> g);

struct KhovanovConfig {
  int crossing_cap = 14;
};

/// Khovanov homology over the two-element field from the cube of resolutions.
/// Gradings: i = r - n_-, j = (#v+ - #v-) + r + n_+ - 2 n_-, where r counts
/// B-smoothings.
BigradedDimensions khovanov_f2(const PlanarDiagram& d, const KhovanovConfig& cfg = {});

/// (max delta - min delta) / 2 + 1 for Khovanov data.
int kh_delta_width(const BigradedDimensions& dims);

/// Closed-form knot Floer dimensions of the iterated Whitehead double W_n.
BigradedDimensions hfk_whitehead_dims(int n);

/// max delta - min delta + 1 for knot Floer data.
int hfk_width(const BigradedDimensions& dims);

}  // namespace altdist
