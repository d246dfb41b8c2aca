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
#include <vector>

#include "rirsynth/params.hpp"

namespace rirsynth {

struct Range {
  double min = 0.0;
  double max = 0.0;

  double midpoint() const { return 0.5 * (min + max); }
  bool contains(double v) const { return v >= min && v <= max; }
  bool operator==(const Range&) const = default;
};

// Bounds from which parameter sets are drawn. The defaults are the speech
// enhancement training configuration: RT60 0.2-0.7 s, EDT 50-100 ms,
// ITDG 3-10 ms, DRR -7-0 dB, 6 dB noise deviation at 16 kHz.
struct ParamRanges {
  Range rt60{0.2, 0.7};
  Range edt{0.05, 0.1};
  Range itdg{0.003, 0.01};
  Range drr{-7.0, 0.0};
  Range deviation_db{6.0, 6.0};
  std::uint32_t sample_rate = 16000;
  std::uint64_t base_seed = 0;
  double early_deletion_probability = 0.75;

  // Throws kInvalidRanges.
  void Validate() const;

  bool operator==(const ParamRanges&) const = default;
};

inline constexpr int kMaxSampleAttempts = 100;

// Draws every parameter uniformly and independently from the stream
// DeriveSeed(DeriveSeed(base_seed, index), kSamplerStream), redrawing jointly
// until the set is valid. The returned seed is DeriveSeed(base_seed, index).
// Throws kInvalidRanges, or kUnsatisfiableRanges after kMaxSampleAttempts.
RirParams Sample(const ParamRanges& ranges, std::uint64_t index);

struct SampledItem {
  std::uint64_t index = 0;
  RirParams params;
};

struct SampledBatch {
  std::vector<SampledItem> items;
  ParamRanges ranges;
};

SampledBatch SampleBatch(const ParamRanges& ranges, std::size_t count);

}  // namespace rirsynth
