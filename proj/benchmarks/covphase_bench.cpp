// Copyright 2026 The covphase Authors
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

#include <numbers>

#include <benchmark/benchmark.h>

#include "covphase/estimator.hpp"
#include "covphase/oracle.hpp"
#include "covphase/repr.hpp"

namespace {

constexpr double kEquator = std::numbers::pi / 2;

void BM_AveragedCosine(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const covphase::BlochState bloch(0.9, kEquator);
  for (auto _ : state) benchmark::DoNotOptimize(covphase::averaged_cosine(n, bloch));
}
BENCHMARK(BM_AveragedCosine)->Arg(10)->Arg(21)->Arg(64)->Unit(benchmark::kMicrosecond);

void BM_WignerD(benchmark::State& state) {
  const auto j = covphase::HalfInteger::from_twice(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(covphase::wigner_d(j, 1.0));
}
BENCHMARK(BM_WignerD)->Arg(1)->Arg(21)->Arg(64)->Unit(benchmark::kMicrosecond);

void BM_BuildSeed(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const covphase::BlochState bloch(0.9, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(covphase::build_seed(n, bloch));
}
BENCHMARK(BM_BuildSeed)->Arg(10)->Arg(21)->Unit(benchmark::kMicrosecond);

void BM_DenseOracle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(covphase::oracle_avg_cosine(n, 0.9, 1.0));
}
BENCHMARK(BM_DenseOracle)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
