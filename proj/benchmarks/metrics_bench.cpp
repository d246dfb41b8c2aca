// Copyright 2026 The rirsynth Authors. All Rights Reserved.
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

#include "rirsynth/generator.hpp"
#include "rirsynth/metrics.hpp"

namespace rirsynth {
namespace {

void BM_MeasureAll(benchmark::State& state) {
  RirParams p;
  p.rt60 = static_cast<double>(state.range(0)) / 1000.0;
  const auto rir = ToPressure(GenerateRir(p));
  for (auto _ : state) benchmark::DoNotOptimize(MeasureAll(rir));
}
BENCHMARK(BM_MeasureAll)->Arg(500)->Arg(2000);

void BM_Schroeder(benchmark::State& state) {
  RirParams p;
  const auto rir = ToPressure(GenerateRir(p));
  for (auto _ : state) benchmark::DoNotOptimize(ComputeSchroederCurve(rir));
}
BENCHMARK(BM_Schroeder);

}  // namespace
}  // namespace rirsynth
