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

#include "rirsynth/multiband.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include "rirsynth/dsp.hpp"
#include "rirsynth/errors.hpp"

namespace rirsynth {
namespace {

constexpr std::array<double, 10> kOctaveCenters = {31.5, 63,   125,  250,  500,
                                                   1000, 2000, 4000, 8000, 16000};
constexpr std::array<double, 31> kThirdOctaveCenters = {
    20,   25,   31.5, 40,   50,   63,   80,    100,   125,   160,   200,
    250,  315,  400,  500,  630,  800,  1000,  1250,  1600,  2000,  2500,
    3150, 4000, 5000, 6300, 8000, 10000, 12500, 16000, 20000};

// Upper edge of the raised-cosine transition relative to the band edge.
constexpr double kTransitionMargin = 1.05;

BandLayout BandsFromCenters(std::span<const double> centers, double half_ratio) {
  BandLayout layout;
  for (double fc : centers) layout.bands.push_back({fc / half_ratio, fc * half_ratio});
  return layout;
}

template <std::size_t N>
BandLayout StandardBands(const std::array<double, N>& centers, double half_ratio,
                         std::uint32_t sample_rate) {
  // Skip the lowest standard bands: they would need responses longer than
  // any RT60 in use to resolve.
  const double nyquist = 0.5 * static_cast<double>(sample_rate);
  std::vector<double> kept;
  for (double fc : centers) {
    if (fc >= 100.0 && fc * half_ratio * kTransitionMargin < nyquist) kept.push_back(fc);
  }
  return BandsFromCenters(kept, half_ratio);
}

}  // namespace

double Band::center_hz() const { return std::sqrt(low_hz * high_hz); }

BandLayout OctaveBands(std::span<const double> centers_hz) {
  return BandsFromCenters(centers_hz, std::sqrt(2.0));
}

BandLayout ThirdOctaveBands(std::span<const double> centers_hz) {
  return BandsFromCenters(centers_hz, std::pow(2.0, 1.0 / 6.0));
}

BandLayout StandardOctaveBands(std::uint32_t sample_rate) {
  return StandardBands(kOctaveCenters, std::sqrt(2.0), sample_rate);
}

BandLayout StandardThirdOctaveBands(std::uint32_t sample_rate) {
  return StandardBands(kThirdOctaveCenters, std::pow(2.0, 1.0 / 6.0), sample_rate);
}

void ValidateBandLayout(const BandLayout& layout, std::uint32_t sample_rate) {
  if (layout.bands.empty()) {
    throw Error(ErrorCode::kInvalidBandLayout, "band layout is empty");
  }
  const double nyquist = 0.5 * static_cast<double>(sample_rate);
  double previous_center = 0.0;
  for (std::size_t b = 0; b < layout.bands.size(); ++b) {
    const Band& band = layout.bands[b];
    if (!(band.low_hz > 0.0 && band.low_hz < band.high_hz && band.high_hz < nyquist)) {
      throw Error(ErrorCode::kInvalidBandLayout,
                  fmt::format("band {} [{}, {}] Hz must lie inside (0, {}) Hz", b,
                              band.low_hz, band.high_hz, nyquist));
    }
    if (band.center_hz() <= previous_center) {
      throw Error(ErrorCode::kInvalidBandLayout,
                  fmt::format("band {} center {} Hz is not above the previous band", b,
                              band.center_hz()));
    }
    previous_center = band.center_hz();
  }
}

PressureImpulseResponse GenerateMultibandRir(std::span<const RirParams> band_params,
                                             const BandLayout& layout) {
  if (band_params.empty()) {
    throw Error(ErrorCode::kInvalidBandLayout, "no band parameters given");
  }
  const std::uint32_t sample_rate = band_params.front().sample_rate;
  ValidateBandLayout(layout, sample_rate);
  if (band_params.size() != layout.bands.size()) {
    throw Error(ErrorCode::kInvalidBandLayout,
                fmt::format("{} band parameter sets for {} bands", band_params.size(),
                            layout.bands.size()));
  }
  for (std::size_t b = 1; b < band_params.size(); ++b) {
    if (band_params[b].sample_rate != sample_rate) {
      throw Error(ErrorCode::kInvalidBandLayout,
                  fmt::format("band {} sample rate {} differs from {}", b,
                              band_params[b].sample_rate, sample_rate));
    }
    if (band_params[b].rt60 > band_params[b - 1].rt60) {
      spdlog::warn("band {} RT60 {:.3f} s exceeds the lower band's {:.3f} s", b,
                   band_params[b].rt60, band_params[b - 1].rt60);
    }
  }

  const std::uint64_t base_seed = band_params.front().seed;
  PressureImpulseResponse sum;
  sum.sample_rate = sample_rate;
  for (std::size_t b = 0; b < band_params.size(); ++b) {
    RirParams params = band_params[b];
    params.seed = base_seed + b;
    std::vector<double> filtered;
    try {
      const PressureImpulseResponse pressure = ToPressure(GenerateRir(params));
      filtered = BandpassSamples(pressure.amplitudes, sample_rate,
                                 layout.bands[b].low_hz, layout.bands[b].high_hz);
    } catch (const Error& e) {
      throw Error(e.code(), fmt::format("band {}: {}", b, e.what()));
    }
    if (filtered.size() > sum.amplitudes.size()) sum.amplitudes.resize(filtered.size(), 0.0);
    for (std::size_t n = 0; n < filtered.size(); ++n) sum.amplitudes[n] += filtered[n];
  }
  return sum;
}

}  // namespace rirsynth
