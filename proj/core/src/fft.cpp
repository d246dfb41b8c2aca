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

#include "fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace rirsynth::internal {

std::size_t NextPowerOfTwo(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

FftPlan::FftPlan(std::size_t size) : size_(size) {
  if (size == 0 || (size & (size - 1)) != 0) {
    throw std::invalid_argument("FFT size must be a power of two");
  }
  twiddles_.resize(size / 2);
  for (std::size_t i = 0; i < size / 2; ++i) {
    const double angle = -2.0 * std::numbers::pi * static_cast<double>(i) /
                         static_cast<double>(size);
    twiddles_[i] = {std::cos(angle), std::sin(angle)};
  }
  bit_reverse_.resize(size);
  std::size_t bits = 0;
  while ((std::size_t{1} << bits) < size) ++bits;
  for (std::size_t i = 0; i < size; ++i) {
    std::size_t r = 0;
    for (std::size_t b = 0; b < bits; ++b) {
      if (i & (std::size_t{1} << b)) r |= std::size_t{1} << (bits - 1 - b);
    }
    bit_reverse_[i] = r;
  }
}

void FftPlan::Forward(std::span<std::complex<double>> data) const {
  Transform(data, false);
}

void FftPlan::Inverse(std::span<std::complex<double>> data) const {
  Transform(data, true);
  const double scale = 1.0 / static_cast<double>(size_);
  for (auto& x : data) x *= scale;
}

void FftPlan::Transform(std::span<std::complex<double>> data, bool inverse) const {
  if (data.size() != size_) throw std::invalid_argument("FFT size mismatch");
  for (std::size_t i = 0; i < size_; ++i) {
    if (i < bit_reverse_[i]) std::swap(data[i], data[bit_reverse_[i]]);
  }
  for (std::size_t len = 2; len <= size_; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t stride = size_ / len;
    for (std::size_t start = 0; start < size_; start += len) {
      for (std::size_t j = 0; j < half; ++j) {
        // Written out: std::complex operator* goes through the Annex G
        // NaN handling path under GCC.
        const std::complex<double> w = twiddles_[j * stride];
        const double wi = inverse ? -w.imag() : w.imag();
        const std::complex<double> x = data[start + j + half];
        const std::complex<double> t(w.real() * x.real() - wi * x.imag(),
                                     w.real() * x.imag() + wi * x.real());
        data[start + j + half] = data[start + j] - t;
        data[start + j] += t;
      }
    }
  }
}

}  // namespace rirsynth::internal
