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

#include <stdexcept>
#include <string>
#include <string_view>

namespace altdist {

/// Error categories raised by the library. Every failure mode that a caller
/// may want to branch on has its own value.
enum class Errc {
  empty_input,
  malformed_token,
  edge_multiplicity,
  non_planar,
  inconsistent_orientation,
  disconnected,
  index_out_of_range,
  length_mismatch,
  cap_exceeded,
  tangle_not_alternating,
  tangle_does_not_extend,
  invalid_parameter,
  not_a_knot,
  jones_mismatch,
  empty_dimensions,
  unsupported_family,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace altdist
