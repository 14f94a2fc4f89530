// Copyright 2026 The Pacing Authors
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

#include <vector>

#include "pacing/allocation.h"
#include "pacing/circuit.h"
#include "pacing/reduction.h"
#include "pacing/solver.h"
#include "pacing/verify.h"

namespace pacing {
namespace {

// A directed NOT cycle of length n; even lengths have pure solutions.
Circuit NotCycle(std::size_t n) {
  std::vector<Gate> gates;
  for (Node v = 1; v <= n; ++v) gates.push_back(Gate::Not(v, v % n + 1));
  return Circuit(n, std::move(gates));
}

Assignment Alternating(std::size_t n) {
  Assignment x(n);
  for (Node v = 1; v <= n; ++v) x.Set(v, v % 2 ? Logic::kOne : Logic::kZero);
  return x;
}

void BM_CompileMain(benchmark::State& state) {
  const Circuit c = NotCycle(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(CompileMain(c));
}
BENCHMARK(BM_CompileMain)->RangeMultiplier(4)->Range(4, 256);

void BM_Verify(benchmark::State& state) {
  const std::size_t n = state.range(0);
  const ReductionArtifact a = CompileMain(NotCycle(n));
  const Equilibrium e = *CandidateFromAssignment(a, Alternating(n));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        Verify(a.game, e.alpha, e.x, ApproxParams::Exact()));
  }
}
BENCHMARK(BM_Verify)->RangeMultiplier(4)->Range(4, 256);

void BM_AllocationFeasible(benchmark::State& state) {
  const std::size_t n = state.range(0);
  const ReductionArtifact a = CompileMain(NotCycle(n));
  const MultiplierProfile alpha =
      CandidateFromAssignment(a, Alternating(n))->alpha;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        AllocationFeasible(a.game, alpha, ApproxParams::Exact()));
  }
}
BENCHMARK(BM_AllocationFeasible)->RangeMultiplier(4)->Range(4, 256);

void BM_GridSearchMain(benchmark::State& state) {
  const ReductionArtifact a = CompileMain(NotCycle(state.range(0)));
  SearchConfig config;
  config.grid = MainGrid(a.params());
  for (auto _ : state) {
    benchmark::DoNotOptimize(GridSearch(a, ApproxParams::Exact(), config));
  }
}
BENCHMARK(BM_GridSearchMain)->DenseRange(2, 10, 2);

void BM_GridSearchWeak(benchmark::State& state) {
  const ReductionArtifact a = CompileWeak(NotCycle(state.range(0)));
  SearchConfig config;
  config.grid = WeakGrid();
  for (auto _ : state) {
    benchmark::DoNotOptimize(GridSearch(a, TargetParams(a), config));
  }
}
BENCHMARK(BM_GridSearchWeak)->DenseRange(2, 8, 2);

void BM_BruteForceSolve(benchmark::State& state) {
  const Circuit c = NotCycle(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(BruteForceSolve(c));
}
BENCHMARK(BM_BruteForceSolve)->DenseRange(4, 10, 2);

}  // namespace
}  // namespace pacing

BENCHMARK_MAIN();
