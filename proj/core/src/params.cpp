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

#include "rirsynth/params.hpp"

#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "rirsynth/errors.hpp"

namespace rirsynth {

std::size_t SecondsToSamples(double seconds, std::uint32_t sample_rate) {
  const double scaled = seconds * static_cast<double>(sample_rate);
  if (!(scaled > 0.0)) return 0;
  const double rounded = std::floor(scaled + 0.5);
  if (rounded >= static_cast<double>(std::numeric_limits<std::size_t>::max())) {
    return std::numeric_limits<std::size_t>::max();
  }
  return static_cast<std::size_t>(rounded);
}

std::optional<std::string> RirParams::Violation() const {
  const bool finite = std::isfinite(rt60) && std::isfinite(edt) &&
                      std::isfinite(itdg) && std::isfinite(drr_target) &&
                      std::isfinite(deviation_db) &&
                      std::isfinite(early_deletion_probability);
  if (!finite) return "parameters must be finite";
  if (sample_rate == 0) return "sample_rate must be > 0";
  if (!(rt60 > 0.0)) return fmt::format("rt60 must be > 0 (got {})", rt60);
  if (!(edt > 0.0 && edt < rt60)) {
    return fmt::format("edt must satisfy 0 < edt < rt60 (edt {}, rt60 {})", edt, rt60);
  }
  if (itdg < 0.0) return fmt::format("itdg must be >= 0 (got {})", itdg);
  if (deviation_db < 0.0) {
    return fmt::format("deviation_db must be >= 0 (got {})", deviation_db);
  }
  if (early_deletion_probability < 0.0 || early_deletion_probability > 1.0) {
    return fmt::format("early_deletion_probability must be in [0, 1] (got {})",
                       early_deletion_probability);
  }
  const std::size_t l = rt60_samples();
  const std::size_t k = edt_samples();
  const std::size_t g = itdg_samples();
  if (l < 2) return fmt::format("rt60 spans {} samples, need at least 2", l);
  if (k == 0 || k >= l) {
    return fmt::format("edt spans {} samples, need 0 < k < l = {}", k, l);
  }
  if (g >= l - 1) {
    return fmt::format("itdg spans {} samples, need g < l - 1 = {}", g, l - 1);
  }
  return std::nullopt;
}

void RirParams::Validate() const {
  if (auto violation = Violation()) {
    throw Error(ErrorCode::kInvalidParams, *violation);
  }
}

}  // namespace rirsynth
