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

#include "rirsynth/generator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <utility>

#include <fmt/format.h>

#include "rirsynth/errors.hpp"

namespace rirsynth {
namespace {

double SumReverberant(std::span<const double> energies) {
  return std::accumulate(energies.begin() + 1, energies.end(), 0.0);
}

// Surviving rays of one deletion region; swap-remove keeps picks O(1).
class RayPool {
 public:
  RayPool(std::span<const double> energies, std::size_t first, std::size_t last) {
    for (std::size_t n = first; n <= last && n < energies.size(); ++n) {
      if (energies[n] > 0.0) indices_.push_back(n);
    }
  }

  bool empty() const { return indices_.empty(); }
  std::size_t size() const { return indices_.size(); }

  std::size_t Take(Rng& rng) {
    const std::size_t pick = rng.Index(indices_.size());
    const std::size_t ray = indices_[pick];
    indices_[pick] = indices_.back();
    indices_.pop_back();
    return ray;
  }

 private:
  std::vector<std::size_t> indices_;
};

}  // namespace

EnergyDecayCurve GenerateNoiseVector(const RirParams& params, Rng& rng) {
  params.Validate();
  const std::size_t l = params.rt60_samples();
  EnergyDecayCurve noise;
  noise.edt_index = params.edt_samples();
  noise.levels_db.resize(l + 1);
  noise.levels_db[0] = 0.0;
  for (std::size_t i = 1; i <= l; ++i) {
    noise.levels_db[i] = rng.Uniform(-params.deviation_db, params.deviation_db);
  }
  return noise;
}

EnergyDecayCurve ShapeEnergyDecayCurve(EnergyDecayCurve noise,
                                       const RirParams& params) {
  const std::size_t l = params.rt60_samples();
  const std::size_t k = params.edt_samples();
  if (k == 0 || k >= l) {
    throw Error(ErrorCode::kInvalidParams,
                fmt::format("edt spans {} samples, need 0 < k < l = {}", k, l));
  }
  if (noise.levels_db.size() != l + 1) {
    throw Error(ErrorCode::kInvalidParams,
                fmt::format("noise vector has {} samples, expected {}",
                            noise.levels_db.size(), l + 1));
  }
  const auto kd = static_cast<double>(k);
  const auto ld = static_cast<double>(l);
  auto& level = noise.levels_db;
  level[0] = 0.0;
  for (std::size_t i = 1; i <= k; ++i) {
    level[i] -= 10.0 * static_cast<double>(i) / kd;
  }
  for (std::size_t i = k + 1; i <= l; ++i) {
    level[i] -= 10.0 + 50.0 * static_cast<double>(i - k) / ld;
  }
  noise.edt_index = k;
  return noise;
}

EnergeticImpulseResponse EdcToLinear(const EnergyDecayCurve& edc,
                                     const RirParams& params) {
  EnergeticImpulseResponse eir;
  eir.sample_rate = params.sample_rate;
  eir.params = params;
  eir.energies.resize(edc.levels_db.size());
  std::transform(edc.levels_db.begin(), edc.levels_db.end(), eir.energies.begin(),
                 [](double db) { return std::pow(10.0, db / 10.0); });
  if (eir.energies.empty()) return eir;

  const double peak = *std::max_element(eir.energies.begin(), eir.energies.end());
  for (double& e : eir.energies) e /= peak;
  eir.energies[0] = 1.0;
  return eir;
}

EnergeticImpulseResponse ApplyItdgGap(EnergeticImpulseResponse eir,
                                      const RirParams& params) {
  const std::size_t l = params.rt60_samples();
  const std::size_t g = params.itdg_samples();
  if (l < 2 || g >= l - 1) {
    throw Error(ErrorCode::kInvalidParams,
                fmt::format("itdg spans {} samples, need g < l - 1 = {}", g,
                            l < 1 ? 0 : l - 1));
  }
  const std::size_t end = std::min(g + 1, eir.energies.size());
  std::fill(eir.energies.begin() + std::min<std::size_t>(1, end),
            eir.energies.begin() + end, 0.0);
  return eir;
}

double DirectToReverberantDb(std::span<const double> energies) {
  if (energies.empty()) return -std::numeric_limits<double>::infinity();
  const double reverberant = SumReverberant(energies);
  if (reverberant <= 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(energies[0] / reverberant);
}

EnergeticImpulseResponse SparsifyToDrr(EnergeticImpulseResponse eir,
                                       const RirParams& params, Rng& rng) {
  auto& e = eir.energies;
  if (e.size() < 2) {
    throw Error(ErrorCode::kExhaustedRays, "response has no reflections");
  }
  const double direct = e[0];
  const double target = params.drr_target;
  const auto drr_of = [direct](double reverberant) {
    return 10.0 * std::log10(direct / reverberant);
  };

  double reverberant = SumReverberant(e);
  if (reverberant <= 0.0) {
    throw Error(ErrorCode::kExhaustedRays, "response has no reflections left");
  }
  const double initial = drr_of(reverberant);
  if (initial >= target + 1.0) {
    throw Error(ErrorCode::kInfeasibleDrr,
                fmt::format("initial DRR {:.3f} dB already exceeds target {:.3f} dB "
                            "by 1 dB or more",
                            initial, target));
  }
  if (initial >= target) return eir;

  const std::size_t g = params.itdg_samples();
  const std::size_t k = params.edt_samples();
  RayPool early(e, g + 1, k);
  RayPool late(e, std::max(g, k) + 1, e.size() - 1);

  while (drr_of(reverberant) < target) {
    while (drr_of(reverberant) < target) {
      if (early.size() + late.size() <= 1) {
        throw Error(ErrorCode::kExhaustedRays,
                    fmt::format("DRR target {:.3f} dB needs fewer than one reflection",
                                target));
      }
      const bool pick_early = rng.Bernoulli(params.early_deletion_probability);
      RayPool& pool = (pick_early && !early.empty()) || late.empty() ? early : late;
      const std::size_t ray = pool.Take(rng);
      reverberant -= e[ray];
      e[ray] = 0.0;
    }
    // The running sum has drifted by round-off only; confirm the crossing
    // once against an exact sum.
    reverberant = SumReverberant(e);
  }
  return eir;
}

EnergeticImpulseResponse GenerateRir(const RirParams& params) {
  params.Validate();
  Rng rng(params.seed);
  EnergyDecayCurve curve = GenerateNoiseVector(params, rng);
  curve = ShapeEnergyDecayCurve(std::move(curve), params);
  EnergeticImpulseResponse eir = EdcToLinear(curve, params);
  eir = ApplyItdgGap(std::move(eir), params);
  return SparsifyToDrr(std::move(eir), params, rng);
}

PressureImpulseResponse ToPressure(const EnergeticImpulseResponse& eir,
                                   Rng& polarity_rng) {
  PressureImpulseResponse p;
  p.sample_rate = eir.sample_rate;
  p.amplitudes.resize(eir.energies.size());
  for (std::size_t n = 0; n < eir.energies.size(); ++n) {
    const double magnitude = std::sqrt(eir.energies[n]);
    const bool negative = n > 0 && polarity_rng.Bernoulli(0.5);
    p.amplitudes[n] = negative ? -magnitude : magnitude;
  }
  return p;
}

PressureImpulseResponse ToPressure(const EnergeticImpulseResponse& eir) {
  Rng rng(DeriveSeed(eir.params.seed, kPolarityStream));
  return ToPressure(eir, rng);
}

}  // namespace rirsynth
