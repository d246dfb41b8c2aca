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

#include <cstdint>
#include <filesystem>
#include <span>

#include "rirsynth/dsp.hpp"

namespace rirsynth {

enum class WavFormat { kPcm16, kFloat32 };

// Mono little-endian RIFF/WAVE. pcm16 scales by 32768 with rounding and
// clamps +1.0 to 32767. Throws kClippingError for pcm16 samples outside
// [-1, 1], kNonFiniteSample, and kIoError.
void WriteWav(const std::filesystem::path& path, std::span<const double> samples,
              std::uint32_t sample_rate, WavFormat format);
void WriteWav(const std::filesystem::path& path, const AudioBuffer& audio,
              WavFormat format);

// Reads mono or stereo pcm16, pcm24 or float32 (plain or
// WAVE_FORMAT_EXTENSIBLE). Integer formats map to [-1, 1) by dividing by
// 2^(bits - 1); stereo is averaged to mono. Throws kUnsupportedFormat,
// kCorruptFile and kIoError.
AudioBuffer ReadWav(const std::filesystem::path& path);

}  // namespace rirsynth
