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
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rirsynth/multiband.hpp"
#include "rirsynth/sampler.hpp"
#include "rirsynth/sidecar.hpp"

namespace rirsynth::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitConfigError = 2;

// Environment variable naming the default config file.
inline constexpr const char* kConfigEnvVar = "RIRSYNTH_CONFIG";

enum class BandKind { kOctave, kThirdOctave };

std::string_view ToString(BandKind kind);
// Throws ConfigError.
BandKind ParseBandKind(std::string_view text);

// Raised for anything that maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Settings shared by the config file and the generate flags.
struct GenerateConfig {
  ParamRanges ranges;
  OutputMode mode = OutputMode::kEnergetic;
  std::optional<BandKind> bands;
  // Per-octave RT60/EDT scale above 1 kHz when generating per band.
  double band_rt60_decay_per_octave = 0.8;
};

// Parses a JSON config. Keys (all optional):
//   rt60_s, edt_s, itdg_s, drr_db, deviation_db   [min, max] or a scalar
//   sample_rate_hz, seed, early_deletion_probability,
//   mode ("energetic" | "pressure"), bands ("octave" | "third-octave"),
//   band_rt60_decay_per_octave
// Unknown keys are rejected. Throws ConfigError.
GenerateConfig ParseConfig(std::string_view json_text, GenerateConfig base = {});
GenerateConfig LoadConfigFile(const std::filesystem::path& path, GenerateConfig base = {});

// The config path from --config, else $RIRSYNTH_CONFIG, else none.
std::optional<std::filesystem::path> ResolveConfigPath(
    const std::optional<std::filesystem::path>& flag);

BandLayout LayoutFor(BandKind kind, std::uint32_t sample_rate);

// One parameter set per band: RT60 and EDT scaled by
// decay_per_octave^max(0, log2(fc / 1000)), everything else shared.
std::vector<RirParams> BandParamsFor(const RirParams& broadband, const BandLayout& layout,
                                     double decay_per_octave);

}  // namespace rirsynth::cli
