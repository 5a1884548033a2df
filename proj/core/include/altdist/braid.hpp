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

#include <vector>

#include "altdist/diagram.hpp"

namespace altdist {

/// Word in the braid group on `strands` strands. Letter i > 0 is sigma_i,
/// letter -i is its inverse.
struct BraidWord {
  int strands = 2;
  std::vector<int> letters;

  /// Throws Error(invalid_parameter) unless strands >= 2 and 0 < |i| < strands.
  void validate() const;
  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// Permutation of strand positions induced by the word (0-based).
std::vector<int> strand_permutation(const BraidWord& w);

/// Closure with strands running upward; one crossing per letter in word order.
PlanarDiagram braid_closure(const BraidWord& w);

}  // namespace altdist
