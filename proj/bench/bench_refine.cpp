// Copyright 2026 The pnpsubdiv Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "pnp/metrics.hpp"
#include "pnp/schemes.hpp"
#include "shapes.hpp"

namespace {

using namespace pnp;
namespace t = pnp::testing;

Execution execution(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::Serial : Execution::Parallel;
}

const Mesh& triangle_input() {
  static const Mesh m = [] {
    const Mesh base = t::bumpy_sphere(3, 0.2);
    return base.with_normals(naive_normals(base));
  }();
  return m;
}

const Mesh& quad_input() {
  static const Mesh m = [] {
    const Mesh base = t::quad_sphere(12);
    return base.with_normals(naive_normals(base));
  }();
  return m;
}

void BM_RefineModifiedLoop(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(refine(triangle_input(), {Scheme::Loop, Mode::Modified}, 2, execution(state)));
  }
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}

void BM_RefineModifiedButterfly(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(refine(triangle_input(), {Scheme::Butterfly, Mode::Modified}, 2, execution(state)));
  }
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}

void BM_RefineModifiedCatmullClark(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(refine(quad_input(), {Scheme::CatmullClark, Mode::Modified}, 2, execution(state)));
  }
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}

void BM_RefineLinearLoop(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(refine(triangle_input(), {Scheme::Loop, Mode::Linear}, 2, execution(state)));
  }
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}

void BM_Metrics(benchmark::State& state) {
  static const Mesh refined = refine(triangle_input(), {Scheme::Loop, Mode::Modified}, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(compute_metrics(refined, true, execution(state)));
  }
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}

BENCHMARK(BM_RefineModifiedLoop)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RefineModifiedButterfly)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RefineModifiedCatmullClark)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RefineLinearLoop)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Metrics)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
