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

#include <span>
#include <vector>

#include "rirsynth/generator.hpp"
#include "rirsynth/params.hpp"

namespace rirsynth {

struct Band {
  double low_hz = 0.0;
  double high_hz = 0.0;

  double center_hz() const;
};

// Ordered list of pass bands. Built from center frequencies with
// OctaveBands() ([fc / sqrt 2, fc sqrt 2]) or ThirdOctaveBands()
// ([fc / 2^(1/6), fc 2^(1/6)]), or from explicit edges.
struct BandLayout {
  std::vector<Band> bands;
};

BandLayout OctaveBands(std::span<const double> centers_hz);
BandLayout ThirdOctaveBands(std::span<const double> centers_hz);

// Standard centers whose upper band edge (plus the filter transition) stays
// below Nyquist at `sample_rate`.
BandLayout StandardOctaveBands(std::uint32_t sample_rate);
BandLayout StandardThirdOctaveBands(std::uint32_t sample_rate);

// Throws kInvalidBandLayout if the layout is empty, centers are not strictly
// increasing or an edge is outside (0, sample_rate / 2).
void ValidateBandLayout(const BandLayout& layout, std::uint32_t sample_rate);

// Generates one response per band, each with seed
// band_params[0].seed + band index, converts it to pressure,
// band-passes it to its band and sums everything zero-padded to the longest
// band. Per-band generation errors are rethrown with the band index in the
// message. A per-band RT60 that grows with frequency only logs a warning.
PressureImpulseResponse GenerateMultibandRir(std::span<const RirParams> band_params,
                                             const BandLayout& layout);

}  // namespace rirsynth
