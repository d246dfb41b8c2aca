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

#include "rirsynth/sampler.hpp"

#include <cmath>

#include <fmt/format.h>

#include "rirsynth/errors.hpp"
#include "rirsynth/random.hpp"

namespace rirsynth {
namespace {

void CheckRange(const Range& r, const char* name) {
  if (!std::isfinite(r.min) || !std::isfinite(r.max) || r.min > r.max) {
    throw Error(ErrorCode::kInvalidRanges,
                fmt::format("{} range [{}, {}] is not a valid interval", name, r.min,
                            r.max));
  }
}

}  // namespace

void ParamRanges::Validate() const {
  CheckRange(rt60, "rt60");
  CheckRange(edt, "edt");
  CheckRange(itdg, "itdg");
  CheckRange(drr, "drr");
  CheckRange(deviation_db, "deviation_db");
  if (!(rt60.min > 0.0)) {
    throw Error(ErrorCode::kInvalidRanges, "rt60 minimum must be > 0");
  }
  if (sample_rate == 0) {
    throw Error(ErrorCode::kInvalidRanges, "sample_rate must be > 0");
  }
  if (!(early_deletion_probability >= 0.0 && early_deletion_probability <= 1.0)) {
    throw Error(ErrorCode::kInvalidRanges,
                "early_deletion_probability must be in [0, 1]");
  }
}

RirParams Sample(const ParamRanges& ranges, std::uint64_t index) {
  ranges.Validate();
  const std::uint64_t item_seed = DeriveSeed(ranges.base_seed, index);
  Rng rng(DeriveSeed(item_seed, kSamplerStream));

  RirParams params;
  params.sample_rate = ranges.sample_rate;
  params.seed = item_seed;
  params.early_deletion_probability = ranges.early_deletion_probability;
  for (int attempt = 0; attempt < kMaxSampleAttempts; ++attempt) {
    params.rt60 = rng.Uniform(ranges.rt60.min, ranges.rt60.max);
    params.edt = rng.Uniform(ranges.edt.min, ranges.edt.max);
    params.itdg = rng.Uniform(ranges.itdg.min, ranges.itdg.max);
    params.drr_target = rng.Uniform(ranges.drr.min, ranges.drr.max);
    params.deviation_db = rng.Uniform(ranges.deviation_db.min, ranges.deviation_db.max);
    if (!params.Violation()) return params;
  }
  throw Error(ErrorCode::kUnsatisfiableRanges,
              fmt::format("no valid parameter set for item {} after {} draws "
                          "(last violation: {})",
                          index, kMaxSampleAttempts, *params.Violation()));
}

SampledBatch SampleBatch(const ParamRanges& ranges, std::size_t count) {
  ranges.Validate();
  SampledBatch batch;
  batch.ranges = ranges;
  batch.items.reserve(count);
  for (std::size_t i = 0; i < count; ++i) batch.items.push_back({i, Sample(ranges, i)});
  return batch;
}

}  // namespace rirsynth
