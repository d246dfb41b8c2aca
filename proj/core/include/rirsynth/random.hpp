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

#include <cstddef>
#include <cstdint>
#include <random>

namespace rirsynth {

// SplitMix64 finalizer: z += 0x9e3779b97f4a7c15, then two xor-shift-multiply
// rounds (constants 0xbf58476d1ce4e5b9, 0x94d049bb133111eb) and a final
// xor-shift by 31.
std::uint64_t Mix64(std::uint64_t z) noexcept;

// Seed of item `index` under `base_seed`: Mix64(base_seed ^ Mix64(index)).
// Used for batch items, octave bands and augmentation pairing so that no two
// items share a random stream and results never depend on evaluation order.
std::uint64_t DeriveSeed(std::uint64_t base_seed, std::uint64_t index) noexcept;

// Sub-stream identifiers passed to DeriveSeed(item_seed, ...).
inline constexpr std::uint64_t kSamplerStream = 1;
inline constexpr std::uint64_t kPolarityStream = 2;

// Seeded random stream. Wraps std::mt19937_64, whose output sequence is fixed
// by the standard, and converts to floats/indices with explicit arithmetic
// instead of <random> distributions (those are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t NextU64() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double Uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform on [lo, hi]; returns lo when lo == hi.
  double Uniform(double lo, double hi) {
    if (lo == hi) return lo;
    return lo + (hi - lo) * Uniform();
  }

  // Uniform index in [0, n). n must be > 0.
  std::size_t Index(std::size_t n) {
    auto i = static_cast<std::size_t>(Uniform() * static_cast<double>(n));
    return i < n ? i : n - 1;
  }

  bool Bernoulli(double p) { return Uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace rirsynth
