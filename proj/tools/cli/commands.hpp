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
#include <ostream>
#include <vector>

#include "cli/config.hpp"

namespace rirsynth::cli {

struct GenerateOptions {
  GenerateConfig config;
  std::size_t count = 0;
  std::filesystem::path out_dir;
  bool validate = false;
  unsigned jobs = 1;
};

// Writes rir_NNNNNN.wav (float32) + rir_NNNNNN.json per item and
// generate_manifest.json, and prints a JSON summary to `out`.
// Returns kExitOk, kExitFailure if any item failed, kExitConfigError.
int RunGenerate(const GenerateOptions& options, std::ostream& out);

struct AugmentOptions {
  std::filesystem::path in_dir;
  std::filesystem::path rir_dir;
  std::filesystem::path out_dir;
  std::uint64_t seed = 0;
  double peak_dbfs = -1.0;
};

// Input file i (sorted by name) is paired with RIR
// DeriveSeed(seed, i) mod rir_count (sorted by name) and written as
// <stem>__rir<k>.wav (pcm16), peak-normalized to peak_dbfs. The pairing and
// gains go to augment_manifest.json.
int RunAugment(const AugmentOptions& options, std::ostream& out);

// Pairing rule used by RunAugment.
std::size_t PairedRirIndex(std::uint64_t seed, std::size_t input_index,
                           std::size_t rir_count);

struct MeasureOptions {
  std::vector<std::filesystem::path> paths;
  bool json = false;
  // Treat every file as energetic. Otherwise a file is energetic only when
  // its sidecar says so.
  bool energetic = false;
};

int RunMeasure(const MeasureOptions& options, std::ostream& out);

// Sorted *.wav files directly inside `dir`.
std::vector<std::filesystem::path> ListWavFiles(const std::filesystem::path& dir);

}  // namespace rirsynth::cli
