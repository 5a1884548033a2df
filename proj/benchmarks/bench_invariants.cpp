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

#include <benchmark/benchmark.h>

#include "altdist/alternation.hpp"
#include "altdist/bracket.hpp"
#include "altdist/braid.hpp"
#include "altdist/families.hpp"
#include "altdist/homology.hpp"
#include "altdist/report.hpp"
#include "altdist/signature.hpp"
#include "altdist/warping.hpp"

using namespace altdist;

namespace {

PlanarDiagram t3(int q) { return braid_closure(torus_braid(3, q)); }

void BM_Bracket(benchmark::State& state) {
  const PlanarDiagram d = t3(static_cast<int>(state.range(0)));
  BracketConfig cfg;
  cfg.threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(kauffman_bracket(d, cfg));
  state.SetLabel(std::to_string(d.crossing_count()) + " crossings");
}
BENCHMARK(BM_Bracket)->Args({4, 1})->Args({7, 1})->Args({8, 1})->Args({8, 4})->Unit(benchmark::kMillisecond);

void BM_Khovanov(benchmark::State& state) {
  const PlanarDiagram d = t3(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(khovanov_f2(d));
  state.SetLabel(std::to_string(d.crossing_count()) + " crossings");
}
BENCHMARK(BM_Khovanov)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_GoeritzSignature(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const PlanarDiagram d = braid_closure(torus_braid(p, p + 1));
  for (auto _ : state) benchmark::DoNotOptimize(goeritz_signature(d));
  state.SetLabel(std::to_string(d.crossing_count()) + " crossings");
}
BENCHMARK(BM_GoeritzSignature)->Arg(4)->Arg(7)->Arg(10)->Unit(benchmark::kMicrosecond);

void BM_Dealternating(benchmark::State& state) {
  const PlanarDiagram d = t3(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dealternating_number_diagram(d));
}
BENCHMARK(BM_Dealternating)->Arg(8)->Arg(20)->Unit(benchmark::kMicrosecond);

void BM_Warp(benchmark::State& state) {
  const PlanarDiagram d = t3(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(warping_span_diagram(d));
}
BENCHMARK(BM_Warp)->Arg(8)->Arg(20)->Unit(benchmark::kMicrosecond);

void BM_Report(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  const PlanarDiagram d = t3(q);
  const FamilyFacts f = known_values(FamilyTag::torus, {3, q});
  for (auto _ : state) benchmark::DoNotOptimize(compute_report("T", {d}, f));
}
BENCHMARK(BM_Report)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
