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
#include <span>
#include <vector>

#include "rirsynth/generator.hpp"

namespace rirsynth {

// Mono audio. Construction rejects NaN/Inf samples (kNonFiniteSample) and a
// zero sample rate (kInvalidParams).
class AudioBuffer {
 public:
  AudioBuffer() = default;
  AudioBuffer(std::vector<double> samples, std::uint32_t sample_rate);

  const std::vector<double>& samples() const { return samples_; }
  std::uint32_t sample_rate() const { return sample_rate_; }
  std::size_t size() const { return samples_.size(); }
  double duration_s() const;

 private:
  std::vector<double> samples_;
  std::uint32_t sample_rate_ = 0;
};

// Full linear convolution via FFT overlap-add. Output length is
// a.size() + b.size() - 1 (empty if either input is empty).
std::vector<double> ConvolveSamples(std::span<const double> signal,
                                    std::span<const double> kernel);

// Throws kSampleRateMismatch. The energetic form is convolved as-is.
AudioBuffer Convolve(const AudioBuffer& audio, const EnergeticImpulseResponse& rir);
AudioBuffer Convolve(const AudioBuffer& audio, const PressureImpulseResponse& rir);

double PeakAbs(std::span<const double> samples);

// Gain in dB that brings the peak to target_dbfs. Throws kSilentInput.
double PeakNormalizationGainDb(const AudioBuffer& audio, double target_dbfs = -1.0);

// Scales so that max |sample| = 10^(target_dbfs / 20). Throws kSilentInput.
AudioBuffer NormalizePeak(const AudioBuffer& audio, double target_dbfs = -1.0);

// Zero-phase band-pass mask: 1 inside the band, 0 outside, with a
// raised-cosine transition spanning +-5% around each edge.
double BandMask(double freq_hz, double low_hz, double high_hz);

// Applies BandMask in the frequency domain on a zero-padded FFT (at least 2x
// the input length, so filter ringing does not wrap) and returns the first
// samples.size() output samples. Throws kInvalidBandEdges unless
// 0 < low < high < sample_rate / 2.
std::vector<double> BandpassSamples(std::span<const double> samples,
                                    std::uint32_t sample_rate, double low_hz,
                                    double high_hz);

AudioBuffer Bandpass(const AudioBuffer& audio, double low_hz, double high_hz);

}  // namespace rirsynth
