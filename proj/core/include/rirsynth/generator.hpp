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
#include <span>
#include <vector>

#include "rirsynth/params.hpp"
#include "rirsynth/random.hpp"

namespace rirsynth {

// Decay curve in dB, one value per stored sample (l + 1 values).
// levels_db[0] is the direct ray and always 0 dB. Holds the raw noise vector
// before shaping and the shaped curve after.
struct EnergyDecayCurve {
  std::vector<double> levels_db;
  std::size_t edt_index = 0;  // k
};

// Nonnegative reflection energies (a reflectogram). energies[0] is the
// direct ray and equals 1 after peak normalization.
struct EnergeticImpulseResponse {
  std::vector<double> energies;
  std::uint32_t sample_rate = 0;
  RirParams params;
};

// Signed amplitude-domain response. Acoustic metrics only accept this form:
// they square samples internally.
struct PressureImpulseResponse {
  std::vector<double> amplitudes;
  std::uint32_t sample_rate = 0;
};

// Step 1: direct ray at 0 dB, then l samples i.i.d. uniform on
// [-deviation_db, +deviation_db]. Throws kInvalidParams.
EnergyDecayCurve GenerateNoiseVector(const RirParams& params, Rng& rng);

// Step 2: subtracts the two-slope decay from stored indices i = 1..l:
//   i <= k:  10 i / k
//   i >  k:  10 + 50 (i - k) / l
// Index 0 is left at 0 dB. Throws kInvalidParams if k >= l.
EnergyDecayCurve ShapeEnergyDecayCurve(EnergyDecayCurve noise,
                                       const RirParams& params);

// Step 3: 10^(level / 10), divided by the peak. When the noise lifts an early
// reflection above 0 dB the direct ray is lifted to that peak as well, so the
// direct ray is always the (first) maximum and equals 1.
EnergeticImpulseResponse EdcToLinear(const EnergyDecayCurve& edc,
                                     const RirParams& params);

// Step 4a: zeroes energies[1..=g]. Throws kInvalidParams if g >= l - 1.
EnergeticImpulseResponse ApplyItdgGap(EnergeticImpulseResponse eir,
                                      const RirParams& params);

// Step 4b: deletes single rays at random until the direct-to-reverberant
// ratio first reaches params.drr_target. Deletions pick the early region
// (g, k] with probability params.early_deletion_probability, otherwise the
// late region (k, l]; a region without survivors falls back to the other.
// Reverberant energy is tracked as a running sum.
//
// Throws kInfeasibleDrr if the starting ratio is already >= target + 1 dB and
// kExhaustedRays if the target needs fewer than one reflection.
EnergeticImpulseResponse SparsifyToDrr(EnergeticImpulseResponse eir,
                                       const RirParams& params, Rng& rng);

// Full pipeline. The noise draw and the deletions share one stream seeded with
// params.seed, so the output is a pure function of params.
EnergeticImpulseResponse GenerateRir(const RirParams& params);

// amplitudes[n] = s_n sqrt(energies[n]); s_0 = +1, other signs fair coin flips.
PressureImpulseResponse ToPressure(const EnergeticImpulseResponse& eir,
                                   Rng& polarity_rng);

// Same, with the polarity stream DeriveSeed(params.seed, kPolarityStream).
PressureImpulseResponse ToPressure(const EnergeticImpulseResponse& eir);

// 10 log10(energies[0] / sum(energies[1..])). +inf without reverberant energy.
double DirectToReverberantDb(std::span<const double> energies);

}  // namespace rirsynth
