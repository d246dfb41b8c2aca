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

#include "rirsynth/dsp.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include <fmt/format.h>

#include "fft.hpp"
#include "rirsynth/errors.hpp"

namespace rirsynth {
namespace {

constexpr double kTransitionHalfWidth = 0.05;

void CheckRates(std::uint32_t audio_rate, std::uint32_t rir_rate) {
  if (audio_rate != rir_rate) {
    throw Error(ErrorCode::kSampleRateMismatch,
                fmt::format("audio is {} Hz but the impulse response is {} Hz",
                            audio_rate, rir_rate));
  }
}

}  // namespace

AudioBuffer::AudioBuffer(std::vector<double> samples, std::uint32_t sample_rate)
    : samples_(std::move(samples)), sample_rate_(sample_rate) {
  if (sample_rate_ == 0) {
    throw Error(ErrorCode::kInvalidParams, "sample rate must be > 0");
  }
  const auto bad = std::find_if(samples_.begin(), samples_.end(),
                                [](double x) { return !std::isfinite(x); });
  if (bad != samples_.end()) {
    throw Error(ErrorCode::kNonFiniteSample,
                fmt::format("sample {} is not finite", bad - samples_.begin()));
  }
}

double AudioBuffer::duration_s() const {
  return static_cast<double>(samples_.size()) / static_cast<double>(sample_rate_);
}

std::vector<double> ConvolveSamples(std::span<const double> signal,
                                    std::span<const double> kernel) {
  if (signal.empty() || kernel.empty()) return {};
  const std::size_t out_size = signal.size() + kernel.size() - 1;

  // Overlap-add: each block of `block` input samples convolved with the
  // kernel fits in one FFT frame without wrap-around.
  const std::size_t fft_size =
      internal::NextPowerOfTwo(std::max<std::size_t>(2 * kernel.size(), 256));
  const std::size_t block = fft_size - kernel.size() + 1;
  const internal::FftPlan plan(fft_size);

  std::vector<std::complex<double>> kernel_spectrum(fft_size);
  std::copy(kernel.begin(), kernel.end(), kernel_spectrum.begin());
  plan.Forward(kernel_spectrum);

  std::vector<double> out(out_size, 0.0);
  std::vector<std::complex<double>> frame(fft_size);
  for (std::size_t start = 0; start < signal.size(); start += block) {
    const std::size_t count = std::min(block, signal.size() - start);
    std::fill(frame.begin(), frame.end(), std::complex<double>{});
    std::copy_n(signal.begin() + start, count, frame.begin());
    plan.Forward(frame);
    for (std::size_t i = 0; i < fft_size; ++i) frame[i] *= kernel_spectrum[i];
    plan.Inverse(frame);
    const std::size_t produced = std::min(count + kernel.size() - 1, out_size - start);
    for (std::size_t i = 0; i < produced; ++i) out[start + i] += frame[i].real();
  }
  return out;
}

AudioBuffer Convolve(const AudioBuffer& audio, const EnergeticImpulseResponse& rir) {
  CheckRates(audio.sample_rate(), rir.sample_rate);
  return AudioBuffer(ConvolveSamples(audio.samples(), rir.energies),
                     audio.sample_rate());
}

AudioBuffer Convolve(const AudioBuffer& audio, const PressureImpulseResponse& rir) {
  CheckRates(audio.sample_rate(), rir.sample_rate);
  return AudioBuffer(ConvolveSamples(audio.samples(), rir.amplitudes),
                     audio.sample_rate());
}

double PeakAbs(std::span<const double> samples) {
  double peak = 0.0;
  for (double x : samples) peak = std::max(peak, std::abs(x));
  return peak;
}

double PeakNormalizationGainDb(const AudioBuffer& audio, double target_dbfs) {
  const double peak = PeakAbs(audio.samples());
  if (peak == 0.0) throw Error(ErrorCode::kSilentInput, "cannot normalize silence");
  return target_dbfs - 20.0 * std::log10(peak);
}

AudioBuffer NormalizePeak(const AudioBuffer& audio, double target_dbfs) {
  const double peak = PeakAbs(audio.samples());
  if (peak == 0.0) throw Error(ErrorCode::kSilentInput, "cannot normalize silence");
  const double scale = std::pow(10.0, target_dbfs / 20.0) / peak;
  std::vector<double> out(audio.samples());
  for (double& x : out) x *= scale;
  return AudioBuffer(std::move(out), audio.sample_rate());
}

double BandMask(double freq_hz, double low_hz, double high_hz) {
  const double f = std::abs(freq_hz);
  const double low_start = low_hz * (1.0 - kTransitionHalfWidth);
  const double low_end = low_hz * (1.0 + kTransitionHalfWidth);
  const double high_start = high_hz * (1.0 - kTransitionHalfWidth);
  const double high_end = high_hz * (1.0 + kTransitionHalfWidth);
  if (f <= low_start || f >= high_end) return 0.0;
  double gain = 1.0;
  if (f < low_end) {
    gain = std::min(gain, 0.5 - 0.5 * std::cos(std::numbers::pi * (f - low_start) /
                                               (low_end - low_start)));
  }
  if (f > high_start) {
    gain = std::min(gain, 0.5 + 0.5 * std::cos(std::numbers::pi * (f - high_start) /
                                               (high_end - high_start)));
  }
  return gain;
}

std::vector<double> BandpassSamples(std::span<const double> samples,
                                    std::uint32_t sample_rate, double low_hz,
                                    double high_hz) {
  const double nyquist = 0.5 * static_cast<double>(sample_rate);
  if (!(low_hz > 0.0 && low_hz < high_hz && high_hz < nyquist)) {
    throw Error(ErrorCode::kInvalidBandEdges,
                fmt::format("band [{}, {}] Hz must satisfy 0 < low < high < {} Hz",
                            low_hz, high_hz, nyquist));
  }
  if (samples.empty()) return {};

  const std::size_t fft_size = internal::NextPowerOfTwo(2 * samples.size());
  const internal::FftPlan plan(fft_size);
  std::vector<std::complex<double>> spectrum(fft_size);
  std::copy(samples.begin(), samples.end(), spectrum.begin());
  plan.Forward(spectrum);
  const double bin_hz = static_cast<double>(sample_rate) / static_cast<double>(fft_size);
  for (std::size_t i = 0; i < fft_size; ++i) {
    // Bins above N/2 are the negative frequencies; the mask is even, so the
    // output stays real.
    const std::size_t mirrored = i <= fft_size / 2 ? i : fft_size - i;
    spectrum[i] *= BandMask(static_cast<double>(mirrored) * bin_hz, low_hz, high_hz);
  }
  plan.Inverse(spectrum);

  std::vector<double> out(samples.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = spectrum[i].real();
  return out;
}

AudioBuffer Bandpass(const AudioBuffer& audio, double low_hz, double high_hz) {
  return AudioBuffer(
      BandpassSamples(audio.samples(), audio.sample_rate(), low_hz, high_hz),
      audio.sample_rate());
}

}  // namespace rirsynth
