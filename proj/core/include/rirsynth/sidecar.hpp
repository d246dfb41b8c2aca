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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "rirsynth/metrics.hpp"
#include "rirsynth/params.hpp"

namespace rirsynth {

enum class OutputMode { kEnergetic, kPressure };

std::string_view ToString(OutputMode mode);
// Throws kInvalidParams for anything but "energetic" / "pressure".
OutputMode ParseOutputMode(std::string_view text);

inline constexpr int kSidecarSchemaVersion = 1;

std::string_view ToolVersion();

// Metadata written next to every generated WAV.
struct RirRecord {
  std::string file;  // WAV file name, relative to the sidecar
  RirParams requested;
  std::optional<MeasuredParams> measured;  // present iff validation ran
  OutputMode mode = OutputMode::kEnergetic;
  double applied_gain_db = 0.0;
  std::string tool_version{ToolVersion()};
};

// JSON with sorted keys:
//   schema_version, tool_version, file, mode, applied_gain_db,
//   requested {rt60_s, edt_s, itdg_s, drr_db, deviation_db, sample_rate_hz,
//              seed, early_deletion_probability, rt60_samples, edt_samples,
//              itdg_samples},
//   measured  {rt60_s, edt_s, drr_db, itdg_s, fit_quality, errors {...}}
// A measured field that failed is absent and named in measured.errors.
std::string SidecarJson(const RirRecord& record);

// Throws kIoError.
void WriteSidecar(const RirRecord& record, const std::filesystem::path& path);

// Unknown keys are ignored. Throws kIoError or kCorruptFile.
RirRecord ParseSidecar(std::string_view json);
RirRecord ReadSidecar(const std::filesystem::path& path);

// <stem>.json next to <stem>.wav.
std::filesystem::path SidecarPathFor(const std::filesystem::path& wav_path);

}  // namespace rirsynth
