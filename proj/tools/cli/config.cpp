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

#include "cli/config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "rirsynth/errors.hpp"

namespace rirsynth::cli {
namespace {

using nlohmann::json;

Range ParseRange(const json& value, const char* key) {
  if (value.is_number()) {
    const double v = value.get<double>();
    return {v, v};
  }
  if (value.is_array() && value.size() == 2 && value[0].is_number() &&
      value[1].is_number()) {
    return {value[0].get<double>(), value[1].get<double>()};
  }
  throw ConfigError(fmt::format("'{}' must be a number or a [min, max] pair", key));
}

template <typename T>
T ParseUnsigned(const json& value, const char* key) {
  if (!value.is_number_unsigned()) {
    throw ConfigError(fmt::format("'{}' must be a non-negative integer", key));
  }
  const auto v = value.get<std::uint64_t>();
  if (v > std::numeric_limits<T>::max()) {
    throw ConfigError(fmt::format("'{}' is out of range", key));
  }
  return static_cast<T>(v);
}

}  // namespace

std::string_view ToString(BandKind kind) {
  return kind == BandKind::kOctave ? "octave" : "third-octave";
}

BandKind ParseBandKind(std::string_view text) {
  if (text == "octave") return BandKind::kOctave;
  if (text == "third-octave") return BandKind::kThirdOctave;
  throw ConfigError(
      fmt::format("bands must be 'octave' or 'third-octave' (got '{}')", text));
}

GenerateConfig ParseConfig(std::string_view json_text, GenerateConfig base) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ConfigError(fmt::format("config is not valid JSON: {}", e.what()));
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");

  GenerateConfig cfg = std::move(base);
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "rt60_s") {
        cfg.ranges.rt60 = ParseRange(value, "rt60_s");
      } else if (key == "edt_s") {
        cfg.ranges.edt = ParseRange(value, "edt_s");
      } else if (key == "itdg_s") {
        cfg.ranges.itdg = ParseRange(value, "itdg_s");
      } else if (key == "drr_db") {
        cfg.ranges.drr = ParseRange(value, "drr_db");
      } else if (key == "deviation_db") {
        cfg.ranges.deviation_db = ParseRange(value, "deviation_db");
      } else if (key == "sample_rate_hz") {
        cfg.ranges.sample_rate = ParseUnsigned<std::uint32_t>(value, "sample_rate_hz");
      } else if (key == "seed") {
        cfg.ranges.base_seed = ParseUnsigned<std::uint64_t>(value, "seed");
      } else if (key == "early_deletion_probability") {
        cfg.ranges.early_deletion_probability = value.get<double>();
      } else if (key == "mode") {
        cfg.mode = ParseOutputMode(value.get<std::string>());
      } else if (key == "bands") {
        cfg.bands = ParseBandKind(value.get<std::string>());
      } else if (key == "band_rt60_decay_per_octave") {
        cfg.band_rt60_decay_per_octave = value.get<double>();
      } else {
        throw ConfigError(fmt::format("unknown config key '{}'", key));
      }
    }
  } catch (const json::exception& e) {
    throw ConfigError(fmt::format("bad config value: {}", e.what()));
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
  if (!(cfg.band_rt60_decay_per_octave > 0.0 && cfg.band_rt60_decay_per_octave <= 1.0)) {
    throw ConfigError("band_rt60_decay_per_octave must be in (0, 1]");
  }
  return cfg;
}

GenerateConfig LoadConfigFile(const std::filesystem::path& path, GenerateConfig base) {
  std::ifstream file(path);
  if (!file) throw ConfigError(fmt::format("cannot read config file {}", path.string()));
  std::ostringstream text;
  text << file.rdbuf();
  return ParseConfig(text.str(), std::move(base));
}

std::optional<std::filesystem::path> ResolveConfigPath(
    const std::optional<std::filesystem::path>& flag) {
  if (flag) return flag;
  if (const char* env = std::getenv(kConfigEnvVar); env != nullptr && *env != '\0') {
    return std::filesystem::path(env);
  }
  return std::nullopt;
}

BandLayout LayoutFor(BandKind kind, std::uint32_t sample_rate) {
  return kind == BandKind::kOctave ? StandardOctaveBands(sample_rate)
                                   : StandardThirdOctaveBands(sample_rate);
}

std::vector<RirParams> BandParamsFor(const RirParams& broadband, const BandLayout& layout,
                                     double decay_per_octave) {
  std::vector<RirParams> out;
  out.reserve(layout.bands.size());
  for (const Band& band : layout.bands) {
    const double octaves_above = std::max(0.0, std::log2(band.center_hz() / 1000.0));
    const double scale = std::pow(decay_per_octave, octaves_above);
    RirParams p = broadband;
    p.rt60 *= scale;
    p.edt *= scale;
    out.push_back(p);
  }
  return out;
}

}  // namespace rirsynth::cli
