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

#include "altdist/report.hpp"

namespace altdist::cli {

struct Claim {
  std::string suite;
  std::string statement;
  std::string citation;
  bool pass = false;
  std::string detail;
};

/// t3q, pretzel10_125, modified-torus, whitehead, tangle-ext.
const std::vector<std::string>& suite_names();

/// Runs one suite. Throws Error(invalid_parameter) for an unknown name.
std::vector<Claim> run_suite(std::string_view name, const ReportConfig& cfg);

}  // namespace altdist::cli
