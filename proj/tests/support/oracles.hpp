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

#pragma once

// Test-only reference computations. None of these call into the library, so
// they stay independent of the code paths they check.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

namespace rirsynth::testing {

// O(n m) direct convolution.
inline std::vector<double> NaiveConvolve(std::span<const double> a,
                                         std::span<const double> b) {
  if (a.empty() || b.empty()) return {};
  std::vector<double> out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

inline double RelativeRmsError(std::span<const double> actual,
                               std::span<const double> expected) {
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const double d = actual[i] - expected[i];
    num += d * d;
    den += expected[i] * expected[i];
  }
  return std::sqrt(num / den);
}

// h[n] = exp(-ln(1000) n / (T sr)): energy falls 60 dB every T seconds.
inline std::vector<double> ExponentialDecay(double t60, std::uint32_t sample_rate,
                                            std::size_t length) {
  std::vector<double> h(length);
  const double rate = std::log(1000.0) / (t60 * sample_rate);
  for (std::size_t n = 0; n < length; ++n) h[n] = std::exp(-rate * static_cast<double>(n));
  return h;
}

// Amplitude decay with one rate up to `knee` and another after it, continuous
// at the knee.
inline std::vector<double> TwoSlopeDecay(double early_t60, double late_t60,
                                         std::size_t knee, std::uint32_t sample_rate,
                                         std::size_t length) {
  std::vector<double> h(length);
  const double early = std::log(1000.0) / (early_t60 * sample_rate);
  const double late = std::log(1000.0) / (late_t60 * sample_rate);
  for (std::size_t n = 0; n < length; ++n) {
    const double x = static_cast<double>(n);
    const double k = static_cast<double>(knee);
    h[n] = n <= knee ? std::exp(-early * x) : std::exp(-early * k - late * (x - k));
  }
  return h;
}

inline std::vector<double> Sine(double freq_hz, double amplitude, std::uint32_t sample_rate,
                                std::size_t length) {
  std::vector<double> x(length);
  for (std::size_t n = 0; n < length; ++n) {
    x[n] = amplitude * std::sin(2.0 * std::numbers::pi * freq_hz * static_cast<double>(n) /
                                sample_rate);
  }
  return x;
}

inline double Rms(std::span<const double> x) {
  double sum = 0.0;
  for (double v : x) sum += v * v;
  return std::sqrt(sum / static_cast<double>(x.size()));
}

// 10 log10(e[0] / sum(e[1..])) straight from the definition.
inline double EnergyDrrDb(std::span<const double> energies) {
  double rev = 0.0;
  for (std::size_t n = 1; n < energies.size(); ++n) rev += energies[n];
  return 10.0 * std::log10(energies[0] / rev);
}

// Independent SplitMix64 step (state advanced by the golden gamma, then
// finalized), for checking the documented seed-derivation rule.
inline std::uint64_t ReferenceSplitMix(std::uint64_t x) {
  std::uint64_t z = x + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline double Median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace rirsynth::testing
