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

#include <cstdint>
#include <optional>
#include <vector>

#include "rirsynth/errors.hpp"
#include "rirsynth/generator.hpp"

namespace rirsynth {

// Backward-integrated (Schroeder) energy decay, normalized to 0 dB at n = 0.
// Samples after the last nonzero sample are -infinity.
struct SchroederCurve {
  std::vector<double> levels_db;
  std::uint32_t sample_rate = 0;
};

struct DecayFit {
  double seconds = 0.0;
  // Correlation coefficient of the regression, in [-1, 0] for a decay.
  double fit_quality = 0.0;
};

// A single estimate, or the reason it could not be produced.
template <typename T>
struct Measured {
  std::optional<T> value;
  std::optional<ErrorCode> error;

  bool ok() const { return value.has_value(); }
};

struct MeasuredParams {
  Measured<double> rt60;  // seconds
  Measured<double> edt;   // seconds
  Measured<double> drr;   // dB
  Measured<double> itdg;  // seconds
  Measured<double> fit_quality;
};

struct MetricSettings {
  double direct_window_s = 0.0;
  double itdg_threshold_db = -40.0;
};

// Throws kSilentInput if every sample is zero.
SchroederCurve ComputeSchroederCurve(const PressureImpulseResponse& rir);

// T30: line fit over -5..-35 dB, RT60 = 60 dB / |slope|.
// Throws kInsufficientDecay if the curve never reaches -35 dB.
DecayFit EstimateRt60(const SchroederCurve& curve);

// T20: same over -5..-25 dB. Throws kInsufficientDecay short of -25 dB.
DecayFit EstimateRt60T20(const SchroederCurve& curve);

// Line fit over 0..-10 dB, scaled to a 60 dB decay.
// Throws kInsufficientDecay short of -10 dB.
double EstimateEdt(const SchroederCurve& curve);

// Direct energy is the sum of h^2 over [peak, peak + window], reverberant the
// sum after it. A zero window reduces to the single-sample definition used by
// the generator. Throws kSilentInput and kNoReverberantEnergy.
double MeasureDrr(const PressureImpulseResponse& rir, double direct_window_s = 0.0);

// Seconds from the energy peak to the first later sample whose energy exceeds
// peak_energy * 10^(threshold_db / 10). Throws kNoReflectionFound.
double MeasureItdg(const PressureImpulseResponse& rir, double threshold_db = -40.0);

// All estimators with default settings; RT60 falls back to T20 when the
// curve does not reach -35 dB. Field failures are recorded per field; only a
// silent input throws (kSilentInput).
MeasuredParams MeasureAll(const PressureImpulseResponse& rir,
                          const MetricSettings& settings = {});

}  // namespace rirsynth
