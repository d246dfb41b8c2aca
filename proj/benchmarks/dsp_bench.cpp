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

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "rirsynth/dsp.hpp"
#include "rirsynth/generator.hpp"

namespace rirsynth {
namespace {

std::vector<double> Noise(std::size_t n) {
  std::mt19937_64 gen(1);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> x(n);
  for (double& v : x) v = dist(gen);
  return x;
}

// One second of 16 kHz audio against a response of range(0) ms.
void BM_Convolve(benchmark::State& state) {
  const auto signal = Noise(16000);
  RirParams p;
  p.rt60 = static_cast<double>(state.range(0)) / 1000.0;
  p.edt = 0.05;
  const auto rir = ToPressure(GenerateRir(p)).amplitudes;
  for (auto _ : state) benchmark::DoNotOptimize(ConvolveSamples(signal, rir));
  state.SetBytesProcessed(state.iterations() * signal.size() * sizeof(double));
}
BENCHMARK(BM_Convolve)->Arg(200)->Arg(700)->Arg(2000)->Unit(benchmark::kMicrosecond);

void BM_Bandpass(benchmark::State& state) {
  const auto x = Noise(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(BandpassSamples(x, 16000, 707.0, 1414.0));
}
BENCHMARK(BM_Bandpass)->Arg(8000)->Arg(32000)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace rirsynth
