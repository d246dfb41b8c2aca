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

#include "rirsynth/sidecar.hpp"

#include <array>
#include <fstream>
#include <sstream>
#include <utility>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "rirsynth/errors.hpp"

#ifndef RIRSYNTH_VERSION_STRING
#define RIRSYNTH_VERSION_STRING "0.0.0"
#endif

namespace rirsynth {
namespace {

using nlohmann::json;

constexpr std::array<ErrorCode, 17> kAllCodes = {
    ErrorCode::kInvalidParams,      ErrorCode::kInfeasibleDrr,
    ErrorCode::kExhaustedRays,      ErrorCode::kInvalidBandLayout,
    ErrorCode::kSilentInput,        ErrorCode::kInsufficientDecay,
    ErrorCode::kNoReverberantEnergy, ErrorCode::kNoReflectionFound,
    ErrorCode::kSampleRateMismatch, ErrorCode::kInvalidBandEdges,
    ErrorCode::kNonFiniteSample,    ErrorCode::kInvalidRanges,
    ErrorCode::kUnsatisfiableRanges, ErrorCode::kIoError,
    ErrorCode::kClippingError,      ErrorCode::kUnsupportedFormat,
    ErrorCode::kCorruptFile};

ErrorCode ParseErrorCode(const std::string& name) {
  for (ErrorCode code : kAllCodes) {
    if (ToString(code) == name) return code;
  }
  throw Error(ErrorCode::kCorruptFile, fmt::format("unknown error code '{}'", name));
}

json RequestedToJson(const RirParams& p) {
  return json{{"rt60_s", p.rt60},
              {"edt_s", p.edt},
              {"itdg_s", p.itdg},
              {"drr_db", p.drr_target},
              {"deviation_db", p.deviation_db},
              {"sample_rate_hz", p.sample_rate},
              {"seed", p.seed},
              {"early_deletion_probability", p.early_deletion_probability},
              {"rt60_samples", p.rt60_samples()},
              {"edt_samples", p.edt_samples()},
              {"itdg_samples", p.itdg_samples()}};
}

RirParams RequestedFromJson(const json& j) {
  RirParams p;
  p.rt60 = j.at("rt60_s").get<double>();
  p.edt = j.at("edt_s").get<double>();
  p.itdg = j.at("itdg_s").get<double>();
  p.drr_target = j.at("drr_db").get<double>();
  p.deviation_db = j.at("deviation_db").get<double>();
  p.sample_rate = j.at("sample_rate_hz").get<std::uint32_t>();
  p.seed = j.at("seed").get<std::uint64_t>();
  p.early_deletion_probability =
      j.value("early_deletion_probability", p.early_deletion_probability);
  return p;
}

const std::array<std::pair<const char*, Measured<double> MeasuredParams::*>, 5>
    kMeasuredFields = {{{"rt60_s", &MeasuredParams::rt60},
                        {"edt_s", &MeasuredParams::edt},
                        {"drr_db", &MeasuredParams::drr},
                        {"itdg_s", &MeasuredParams::itdg},
                        {"fit_quality", &MeasuredParams::fit_quality}}};

json MeasuredToJson(const MeasuredParams& m) {
  json out = json::object();
  json errors = json::object();
  for (const auto& [key, field] : kMeasuredFields) {
    const Measured<double>& value = m.*field;
    if (value.value) {
      out[key] = *value.value;
    } else if (value.error) {
      errors[key] = std::string(ToString(*value.error));
    }
  }
  if (!errors.empty()) out["errors"] = std::move(errors);
  return out;
}

MeasuredParams MeasuredFromJson(const json& j) {
  MeasuredParams m;
  const json errors = j.value("errors", json::object());
  for (const auto& [key, field] : kMeasuredFields) {
    Measured<double>& value = m.*field;
    if (j.contains(key)) value.value = j.at(key).get<double>();
    if (errors.contains(key)) value.error = ParseErrorCode(errors.at(key).get<std::string>());
  }
  return m;
}

}  // namespace

std::string_view ToString(OutputMode mode) {
  return mode == OutputMode::kEnergetic ? "energetic" : "pressure";
}

OutputMode ParseOutputMode(std::string_view text) {
  if (text == "energetic") return OutputMode::kEnergetic;
  if (text == "pressure") return OutputMode::kPressure;
  throw Error(ErrorCode::kInvalidParams,
              fmt::format("mode must be 'energetic' or 'pressure' (got '{}')", text));
}

std::string_view ToolVersion() { return RIRSYNTH_VERSION_STRING; }

std::string SidecarJson(const RirRecord& record) {
  json j{{"schema_version", kSidecarSchemaVersion},
         {"tool_version", record.tool_version},
         {"file", record.file},
         {"mode", std::string(ToString(record.mode))},
         {"applied_gain_db", record.applied_gain_db},
         {"requested", RequestedToJson(record.requested)}};
  if (record.measured) j["measured"] = MeasuredToJson(*record.measured);
  return j.dump(2) + "\n";
}

void WriteSidecar(const RirRecord& record, const std::filesystem::path& path) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    throw Error(ErrorCode::kIoError, fmt::format("cannot open {} for writing", path.string()));
  }
  file << SidecarJson(record);
  if (!file) throw Error(ErrorCode::kIoError, fmt::format("write to {} failed", path.string()));
}

RirRecord ParseSidecar(std::string_view text) {
  try {
    const json j = json::parse(text);
    RirRecord record;
    record.file = j.at("file").get<std::string>();
    record.mode = ParseOutputMode(j.at("mode").get<std::string>());
    record.applied_gain_db = j.value("applied_gain_db", 0.0);
    record.tool_version = j.value("tool_version", std::string());
    record.requested = RequestedFromJson(j.at("requested"));
    if (j.contains("measured")) record.measured = MeasuredFromJson(j.at("measured"));
    return record;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kCorruptFile, fmt::format("malformed sidecar: {}", e.what()));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kCorruptFile) throw;
    throw Error(ErrorCode::kCorruptFile, e.what());
  }
}

RirRecord ReadSidecar(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kIoError, fmt::format("cannot open {}", path.string()));
  std::ostringstream text;
  text << file.rdbuf();
  return ParseSidecar(text.str());
}

std::filesystem::path SidecarPathFor(const std::filesystem::path& wav_path) {
  std::filesystem::path p = wav_path;
  p.replace_extension(".json");
  return p;
}

}  // namespace rirsynth
