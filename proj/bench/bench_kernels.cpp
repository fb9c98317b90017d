// Copyright 2026 The polyharm Authors
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

// Serial reference kernels against their OpenMP counterparts. Thread count
// comes from OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "polyharm/extremal.hpp"
#include "polyharm/kernels.hpp"

namespace {

using namespace polyharm;

const PolyharmonicMap& f1() {
  static const PolyharmonicMap map = example_F1(256).map;
  return map;
}

const PolyharmonicMap& f1_wide() {
  static const PolyharmonicMap map = example_F1(4096).map;
  return map;
}

template <auto Scan>
void BM_PairScan(benchmark::State& state) {
  const auto samples = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Scan(f1(), 0.0155, samples, 42));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Grid>
void BM_GridExtrema(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Grid(f1(), 0.5, m));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}

template <auto SupNorm>
void BM_PolarMaxModulus(benchmark::State& state) {
  const auto grid = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(SupNorm(f1_wide(), grid, 0.999));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}

BENCHMARK(BM_PairScan<kernels::serial::pair_scan>)->Name("pair_scan/serial")->Arg(1000)->Arg(10000);
BENCHMARK(BM_PairScan<kernels::parallel::pair_scan>)->Name("pair_scan/parallel")->Arg(1000)->Arg(10000);
BENCHMARK(BM_GridExtrema<kernels::serial::polar_grid_extrema>)->Name("grid_extrema/serial")->Arg(100);
BENCHMARK(BM_GridExtrema<kernels::parallel::polar_grid_extrema>)->Name("grid_extrema/parallel")->Arg(100);
BENCHMARK(BM_PolarMaxModulus<kernels::serial::polar_max_modulus>)
    ->Name("polar_max_modulus/serial")
    ->Arg(201)
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PolarMaxModulus<kernels::parallel::polar_max_modulus>)
    ->Name("polar_max_modulus/parallel_fft")
    ->Arg(201)
    ->Arg(2001)
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
