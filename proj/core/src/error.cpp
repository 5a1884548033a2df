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

#include "altdist/error.hpp"

namespace altdist {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::empty_input: return "empty_input";
    case Errc::malformed_token: return "malformed_token";
    case Errc::edge_multiplicity: return "edge_multiplicity";
    case Errc::non_planar: return "non_planar";
    case Errc::inconsistent_orientation: return "inconsistent_orientation";
    case Errc::disconnected: return "disconnected";
    case Errc::index_out_of_range: return "index_out_of_range";
    case Errc::length_mismatch: return "length_mismatch";
    case Errc::cap_exceeded: return "cap_exceeded";
    case Errc::tangle_not_alternating: return "tangle_not_alternating";
    case Errc::tangle_does_not_extend: return "tangle_does_not_extend";
    case Errc::invalid_parameter: return "invalid_parameter";
    case Errc::not_a_knot: return "not_a_knot";
    case Errc::jones_mismatch: return "jones_mismatch";
    case Errc::empty_dimensions: return "empty_dimensions";
    case Errc::unsupported_family: return "unsupported_family";
  }
  return "unknown";
}

}  // namespace altdist
