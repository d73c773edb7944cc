// Copyright 2026 The votedim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "votedim/codes.hpp"
#include "votedim/constructions.hpp"
#include "votedim/dimension.hpp"
#include "votedim/separation.hpp"
#include "votedim/structure.hpp"
#include "votedim/trading.hpp"
#include "votedim/vector_game.hpp"

namespace {

using namespace votedim;

void BM_IsWeightedExample2(benchmark::State& state) {
  const Game g = example_game("2");
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_weighted(g));
  }
}
BENCHMARK(BM_IsWeightedExample2);

void BM_FindCertificateExample2(benchmark::State& state) {
  const Game g = example_game("2");
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_certificate(g, 4));
  }
}
BENCHMARK(BM_FindCertificateExample2);

void BM_MaximalLosingParametric(benchmark::State& state) {
  const Game g{parametric_bundle(static_cast<int>(state.range(0)),
                                 2 * static_cast<int>(state.range(0)))
                   .game};
  for (auto _ : state) {
    benchmark::DoNotOptimize(maximal_losing(g));
  }
}
BENCHMARK(BM_MaximalLosingParametric)->Arg(3)->Arg(4);

void BM_ConflictGraphParametric(benchmark::State& state) {
  const Game g{parametric_bundle(static_cast<int>(state.range(0)),
                                 2 * static_cast<int>(state.range(0)))
                   .game};
  for (auto _ : state) {
    benchmark::DoNotOptimize(conflict_graph(g));
  }
}
BENCHMARK(BM_ConflictGraphParametric)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_DimensionExactParametric(benchmark::State& state) {
  const Game g{parametric_bundle(static_cast<int>(state.range(0)),
                                 2 * static_cast<int>(state.range(0)))
                   .game};
  for (auto _ : state) {
    benchmark::DoNotOptimize(dimension_exact(g));
  }
}
BENCHMARK(BM_DimensionExactParametric)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_OrderedSeparateStaircase(benchmark::State& state) {
  const VectorGame g = staircase_game(static_cast<int>(state.range(0)));
  Coalition losing(g.n());
  for (int c = 0; c < 4; ++c) {
    for (int k = 1; k <= 4; ++k) losing.add(c * state.range(0) + k);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(ordered_separate(g, losing));
  }
}
BENCHMARK(BM_OrderedSeparateStaircase)->Arg(5)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_GrahamSloaneCode(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(graham_sloane_code(2 * k, k));
  }
}
BENCHMARK(BM_GrahamSloaneCode)->Arg(3)->Arg(4);

void BM_EnumerateT2(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_t2(n));
  }
}
BENCHMARK(BM_EnumerateT2)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
