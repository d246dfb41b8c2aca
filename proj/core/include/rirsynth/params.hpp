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
#include <optional>
#include <string>

namespace rirsynth {

// Converts a duration to a sample count, rounding half up.
std::size_t SecondsToSamples(double seconds, std::uint32_t sample_rate);

// One complete acoustic parameter set for a single generated response.
//
// Durations are in seconds, levels in dB. The sample-domain quantities used
// by the generator are derived on demand:
//   rt60_samples()  l, the decay length (the response stores l + 1 samples,
//                   index 0 being the direct ray),
//   edt_samples()   k, where the -10 dB milestone lands,
//   itdg_samples()  g, the number of zeroed samples after the direct ray.
struct RirParams {
  double rt60 = 0.5;
  double edt = 0.075;
  double itdg = 0.005;
  double drr_target = -3.0;
  // Half-width of the uniform dB noise added to the decay curve.
  double deviation_db = 6.0;
  std::uint32_t sample_rate = 16000;
  std::uint64_t seed = 0;
  // Probability that a deletion targets the early region (g, k].
  double early_deletion_probability = 0.75;

  std::size_t rt60_samples() const { return SecondsToSamples(rt60, sample_rate); }
  std::size_t edt_samples() const { return SecondsToSamples(edt, sample_rate); }
  std::size_t itdg_samples() const { return SecondsToSamples(itdg, sample_rate); }

  // Stored response length, l + 1.
  std::size_t length() const { return rt60_samples() + 1; }

  // Describes the first violated invariant, or nullopt if valid.
  std::optional<std::string> Violation() const;

  // Throws Error(kInvalidParams) on the first violated invariant.
  void Validate() const;

  bool operator==(const RirParams&) const = default;
};

}  // namespace rirsynth
