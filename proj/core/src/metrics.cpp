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

#include "rirsynth/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

namespace rirsynth {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

struct LineFit {
  double slope_db_per_s = 0.0;
  double correlation = 0.0;
};

// Least-squares line through the finite levels in [end_db, start_db].
LineFit FitDecay(const SchroederCurve& curve, double start_db, double end_db) {
  const auto& levels = curve.levels_db;
  if (levels.empty() || levels.back() > end_db) {
    // Non-increasing, so the last level is the minimum.
    throw Error(ErrorCode::kInsufficientDecay,
                fmt::format("decay never reaches {} dB", end_db));
  }
  const double rate = static_cast<double>(curve.sample_rate);
  double n = 0.0, sum_t = 0.0, sum_y = 0.0, sum_tt = 0.0, sum_ty = 0.0, sum_yy = 0.0;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const double y = levels[i];
    if (y > start_db) continue;
    if (y < end_db) break;
    const double t = static_cast<double>(i) / rate;
    n += 1.0;
    sum_t += t;
    sum_y += y;
    sum_tt += t * t;
    sum_ty += t * y;
    sum_yy += y * y;
  }
  const double var_t = n * sum_tt - sum_t * sum_t;
  const double var_y = n * sum_yy - sum_y * sum_y;
  if (n < 2.0 || var_t <= 0.0) {
    throw Error(ErrorCode::kInsufficientDecay,
                fmt::format("fewer than two samples between {} and {} dB", start_db,
                            end_db));
  }
  const double cov = n * sum_ty - sum_t * sum_y;
  LineFit fit;
  fit.slope_db_per_s = cov / var_t;
  fit.correlation = var_y > 0.0 ? cov / std::sqrt(var_t * var_y) : -1.0;
  if (!(fit.slope_db_per_s < 0.0)) {
    throw Error(ErrorCode::kInsufficientDecay, "fitted decay slope is not negative");
  }
  return fit;
}

std::size_t PeakIndex(const std::vector<double>& h) {
  std::size_t peak = 0;
  double peak_energy = -1.0;
  for (std::size_t n = 0; n < h.size(); ++n) {
    const double e = h[n] * h[n];
    if (e > peak_energy) {
      peak_energy = e;
      peak = n;
    }
  }
  if (!(peak_energy > 0.0)) {
    throw Error(ErrorCode::kSilentInput, "impulse response is all zeros");
  }
  return peak;
}

template <typename Fn>
auto Capture(Fn&& fn) -> Measured<decltype(fn())> {
  Measured<decltype(fn())> out;
  try {
    out.value = fn();
  } catch (const Error& e) {
    out.error = e.code();
  }
  return out;
}

}  // namespace

SchroederCurve ComputeSchroederCurve(const PressureImpulseResponse& rir) {
  const auto& h = rir.amplitudes;
  SchroederCurve curve;
  curve.sample_rate = rir.sample_rate;
  curve.levels_db.resize(h.size());

  std::vector<double> tail(h.size());
  double running = 0.0;
  for (std::size_t n = h.size(); n-- > 0;) {
    running += h[n] * h[n];
    tail[n] = running;
  }
  const double total = running;
  if (!(total > 0.0)) {
    throw Error(ErrorCode::kSilentInput, "impulse response is all zeros");
  }
  for (std::size_t n = 0; n < h.size(); ++n) {
    curve.levels_db[n] = tail[n] > 0.0 ? 10.0 * std::log10(tail[n] / total) : kNegInf;
  }
  return curve;
}

DecayFit EstimateRt60(const SchroederCurve& curve) {
  const LineFit fit = FitDecay(curve, -5.0, -35.0);
  return {-60.0 / fit.slope_db_per_s, fit.correlation};
}

DecayFit EstimateRt60T20(const SchroederCurve& curve) {
  const LineFit fit = FitDecay(curve, -5.0, -25.0);
  return {-60.0 / fit.slope_db_per_s, fit.correlation};
}

double EstimateEdt(const SchroederCurve& curve) {
  return -60.0 / FitDecay(curve, 0.0, -10.0).slope_db_per_s;
}

double MeasureDrr(const PressureImpulseResponse& rir, double direct_window_s) {
  if (direct_window_s < 0.0) {
    throw Error(ErrorCode::kInvalidParams, "direct window must be >= 0");
  }
  const auto& h = rir.amplitudes;
  const std::size_t peak = PeakIndex(h);
  const std::size_t window = SecondsToSamples(direct_window_s, rir.sample_rate);
  const std::size_t direct_end = std::min(h.size(), peak + window + 1);
  double direct = 0.0;
  for (std::size_t n = peak; n < direct_end; ++n) direct += h[n] * h[n];
  double reverberant = 0.0;
  for (std::size_t n = direct_end; n < h.size(); ++n) reverberant += h[n] * h[n];
  if (!(reverberant > 0.0)) {
    throw Error(ErrorCode::kNoReverberantEnergy,
                "no energy after the direct sound window");
  }
  return 10.0 * std::log10(direct / reverberant);
}

double MeasureItdg(const PressureImpulseResponse& rir, double threshold_db) {
  const auto& h = rir.amplitudes;
  const std::size_t peak = PeakIndex(h);
  const double threshold = h[peak] * h[peak] * std::pow(10.0, threshold_db / 10.0);
  for (std::size_t n = peak + 1; n < h.size(); ++n) {
    if (h[n] * h[n] > threshold) {
      return static_cast<double>(n - peak) / static_cast<double>(rir.sample_rate);
    }
  }
  throw Error(ErrorCode::kNoReflectionFound,
              fmt::format("no reflection within {} dB of the direct sound", threshold_db));
}

MeasuredParams MeasureAll(const PressureImpulseResponse& rir,
                          const MetricSettings& settings) {
  const SchroederCurve curve = ComputeSchroederCurve(rir);
  MeasuredParams out;

  std::optional<DecayFit> fit;
  try {
    fit = EstimateRt60(curve);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kInsufficientDecay) throw;
    try {
      fit = EstimateRt60T20(curve);
    } catch (const Error& fallback) {
      out.rt60.error = fallback.code();
      out.fit_quality.error = fallback.code();
    }
  }
  if (fit) {
    out.rt60.value = fit->seconds;
    out.fit_quality.value = fit->fit_quality;
  }
  out.edt = Capture([&] { return EstimateEdt(curve); });
  out.drr = Capture([&] { return MeasureDrr(rir, settings.direct_window_s); });
  out.itdg = Capture([&] { return MeasureItdg(rir, settings.itdg_threshold_db); });
  return out;
}

}  // namespace rirsynth
