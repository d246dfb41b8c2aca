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

#include "rirsynth/wav.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include "rirsynth/errors.hpp"

namespace rirsynth {
namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatFloat = 3;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

void PutU16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xFF));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void PutU32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int shift = 0; shift < 32; shift += 8) {
    out.push_back(static_cast<std::uint8_t>((v >> shift) & 0xFF));
  }
}

void PutTag(std::vector<std::uint8_t>& out, const char* tag) {
  out.insert(out.end(), tag, tag + 4);
}

std::uint16_t GetU16(const std::uint8_t* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

std::uint32_t GetU32(const std::uint8_t* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) |
         (static_cast<std::uint32_t>(p[3]) << 24);
}

struct Format {
  std::uint16_t tag = 0;
  std::uint16_t channels = 0;
  std::uint32_t sample_rate = 0;
  std::uint16_t block_align = 0;
  std::uint16_t bits = 0;
};

double DecodeSample(const std::uint8_t* p, const Format& fmt) {
  if (fmt.tag == kFormatFloat) {
    const auto bits = GetU32(p);
    return static_cast<double>(std::bit_cast<float>(bits));
  }
  if (fmt.bits == 16) {
    return static_cast<double>(static_cast<std::int16_t>(GetU16(p))) / 32768.0;
  }
  // 24-bit: sign-extend from the top byte.
  std::int32_t v = p[0] | (p[1] << 8) | (p[2] << 16);
  if (v & 0x800000) v -= 0x1000000;
  return static_cast<double>(v) / 8388608.0;
}

}  // namespace

void WriteWav(const std::filesystem::path& path, std::span<const double> samples,
              std::uint32_t sample_rate, WavFormat format) {
  if (sample_rate == 0) throw Error(ErrorCode::kInvalidParams, "sample rate must be > 0");
  const std::uint16_t bytes_per_sample = format == WavFormat::kPcm16 ? 2 : 4;
  const std::uint64_t data_bytes = static_cast<std::uint64_t>(samples.size()) * bytes_per_sample;
  if (data_bytes > 0xFFFFFFFFull - 64) {
    throw Error(ErrorCode::kIoError, "audio too long for a RIFF/WAVE file");
  }

  std::vector<std::uint8_t> out;
  out.reserve(44 + data_bytes + 1);
  PutTag(out, "RIFF");
  PutU32(out, static_cast<std::uint32_t>(36 + data_bytes));
  PutTag(out, "WAVE");
  PutTag(out, "fmt ");
  PutU32(out, 16);
  PutU16(out, format == WavFormat::kPcm16 ? kFormatPcm : kFormatFloat);
  PutU16(out, 1);
  PutU32(out, sample_rate);
  PutU32(out, sample_rate * bytes_per_sample);
  PutU16(out, bytes_per_sample);
  PutU16(out, static_cast<std::uint16_t>(bytes_per_sample * 8));
  PutTag(out, "data");
  PutU32(out, static_cast<std::uint32_t>(data_bytes));

  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double x = samples[i];
    if (!std::isfinite(x)) {
      throw Error(ErrorCode::kNonFiniteSample, fmt::format("sample {} is not finite", i));
    }
    if (format == WavFormat::kPcm16) {
      if (x < -1.0 || x > 1.0) {
        throw Error(ErrorCode::kClippingError,
                    fmt::format("sample {} = {} is outside [-1, 1]", i, x));
      }
      const double scaled = std::clamp(std::round(x * 32768.0), -32768.0, 32767.0);
      PutU16(out, static_cast<std::uint16_t>(static_cast<std::int16_t>(scaled)));
    } else {
      PutU32(out, std::bit_cast<std::uint32_t>(static_cast<float>(x)));
    }
  }

  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    throw Error(ErrorCode::kIoError, fmt::format("cannot open {} for writing", path.string()));
  }
  file.write(reinterpret_cast<const char*>(out.data()),
             static_cast<std::streamsize>(out.size()));
  if (!file) throw Error(ErrorCode::kIoError, fmt::format("write to {} failed", path.string()));
}

void WriteWav(const std::filesystem::path& path, const AudioBuffer& audio,
              WavFormat format) {
  WriteWav(path, audio.samples(), audio.sample_rate(), format);
}

AudioBuffer ReadWav(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kIoError, fmt::format("cannot open {}", path.string()));
  const std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(file)),
                                        std::istreambuf_iterator<char>());
  const std::string name = path.string();
  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0) {
    throw Error(ErrorCode::kCorruptFile, fmt::format("{} is not a RIFF/WAVE file", name));
  }

  std::optional<Format> format;
  const std::uint8_t* data = nullptr;
  std::size_t data_size = 0;
  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const std::uint8_t* chunk = bytes.data() + pos;
    const std::size_t size = GetU32(chunk + 4);
    const std::size_t body = pos + 8;
    if (std::memcmp(chunk, "fmt ", 4) == 0) {
      if (size < 16 || body + size > bytes.size()) {
        throw Error(ErrorCode::kCorruptFile, fmt::format("{}: truncated fmt chunk", name));
      }
      const std::uint8_t* f = bytes.data() + body;
      Format parsed{GetU16(f), GetU16(f + 2), GetU32(f + 4), GetU16(f + 12), GetU16(f + 14)};
      if (parsed.tag == kFormatExtensible) {
        if (size < 40) {
          throw Error(ErrorCode::kCorruptFile,
                      fmt::format("{}: truncated extensible fmt chunk", name));
        }
        // First two bytes of the SubFormat GUID carry the format tag.
        parsed.tag = GetU16(f + 24);
      }
      format = parsed;
    } else if (std::memcmp(chunk, "data", 4) == 0) {
      if (body + size > bytes.size()) {
        throw Error(ErrorCode::kCorruptFile, fmt::format("{}: truncated data chunk", name));
      }
      data = bytes.data() + body;
      data_size = size;
      break;
    }
    pos = body + size + (size & 1);
  }
  if (!format) throw Error(ErrorCode::kCorruptFile, fmt::format("{}: missing fmt chunk", name));
  if (!data) throw Error(ErrorCode::kCorruptFile, fmt::format("{}: missing data chunk", name));

  const bool supported =
      (format->tag == kFormatPcm && (format->bits == 16 || format->bits == 24)) ||
      (format->tag == kFormatFloat && format->bits == 32);
  if (!supported) {
    throw Error(ErrorCode::kUnsupportedFormat,
                fmt::format("{}: format tag {} with {} bits", name, format->tag, format->bits));
  }
  if (format->channels != 1 && format->channels != 2) {
    throw Error(ErrorCode::kUnsupportedFormat,
                fmt::format("{}: {} channels (mono or stereo only)", name, format->channels));
  }
  if (format->sample_rate == 0) {
    throw Error(ErrorCode::kCorruptFile, fmt::format("{}: zero sample rate", name));
  }
  const std::size_t sample_bytes = format->bits / 8;
  const std::size_t frame_bytes = sample_bytes * format->channels;
  if (format->block_align != frame_bytes) {
    throw Error(ErrorCode::kCorruptFile,
                fmt::format("{}: block align {} does not match {} bytes per frame", name,
                            format->block_align, frame_bytes));
  }
  if (format->channels == 2) {
    spdlog::info("{}: downmixing stereo to mono", name);
  }

  const std::size_t frames = data_size / frame_bytes;
  std::vector<double> samples(frames);
  for (std::size_t i = 0; i < frames; ++i) {
    const std::uint8_t* frame = data + i * frame_bytes;
    double value = DecodeSample(frame, *format);
    if (format->channels == 2) value = 0.5 * (value + DecodeSample(frame + sample_bytes, *format));
    samples[i] = value;
  }
  return AudioBuffer(std::move(samples), format->sample_rate);
}

}  // namespace rirsynth
