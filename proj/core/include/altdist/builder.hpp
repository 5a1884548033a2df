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

#include <array>
#include <map>
#include <vector>

#include "altdist/diagram.hpp"

namespace altdist {

/// Assembles a diagram from unoriented crossings. Raw crossings list their
/// slots counterclockwise with slots 0 and 2 forming the under strand; the
/// builder orients every component and rotates crossings into PD form.
class DiagramBuilder {
 public:
  enum class Hints {
    /// Every hint must agree with the chosen orientation.
    strict,
    /// On conflict the hint on the lowest label of the component wins.
    lowest_label_wins,
  };

  int add_crossing();
  void set_slot(Dart d, int label);
  /// Creates a new edge from one dart to another; `to` is its head.
  int connect(Dart from, Dart to);
  int fresh_label() { return next_label_++; }

  void hint_head(int label, Dart d);
  void hint_tail(int label, Dart d);
  void add_free_loops(int n) { free_loops_ += n; }

  /// Components without hints are oriented so the lowest label is followed
  /// by the next label when possible.
  PlanarDiagram build(Hints mode = Hints::strict) const;

 private:
  struct Hint {
    Dart dart;
    bool head;
  };
  std::vector<std::array<int, 4>> raw_;
  std::multimap<int, Hint> hints_;
  int free_loops_ = 0;
  int next_label_ = 0;
};

}  // namespace altdist
