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
#include "rirsynth/multiband.hpp"
#include "rirsynth/sampler.hpp"

namespace rirsynth {
namespace {

void BM_GenerateRir(benchmark::State& state) {
  RirParams p;
  p.rt60 = static_cast<double>(state.range(0)) / 1000.0;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    p.seed = seed++;
    benchmark::DoNotOptimize(GenerateRir(p));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_GenerateRir)->Arg(200)->Arg(500)->Arg(700)->Arg(2000);

void BM_GenerateSampled(benchmark::State& state) {
  const ParamRanges ranges;
  std::uint64_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ToPressure(GenerateRir(Sample(ranges, i++))));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_GenerateSampled);

void BM_SampleBatch(benchmark::State& state) {
  const ParamRanges ranges;
  for (auto _ : state) {
    benchmark::DoNotOptimize(SampleBatch(ranges, static_cast<std::size_t>(state.range(0))));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleBatch)->Arg(1000);

void BM_GenerateOctaveBands(benchmark::State& state) {
  const BandLayout layout = StandardOctaveBands(16000);
  std::vector<RirParams> params(layout.bands.size());
  for (std::size_t b = 0; b < params.size(); ++b) params[b].rt60 = 0.6 - 0.05 * b;
  for (auto _ : state) benchmark::DoNotOptimize(GenerateMultibandRir(params, layout));
}
BENCHMARK(BM_GenerateOctaveBands)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace rirsynth
