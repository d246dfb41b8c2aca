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

#include <cmath>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <nlohmann/json.hpp>
#include <spdlog/spdlog.h>

#include "cli/commands.hpp"
#include "rirsynth/errors.hpp"
#include "rirsynth/metrics.hpp"
#include "rirsynth/wav.hpp"

namespace rirsynth::cli {
namespace {

using nlohmann::json;

struct Row {
  std::string file;
  bool energetic = false;
  std::optional<MeasuredParams> measured;
  std::string error;
};

bool SidecarSaysEnergetic(const std::filesystem::path& wav) {
  const auto sidecar = SidecarPathFor(wav);
  if (!std::filesystem::exists(sidecar)) return false;
  try {
    return ReadSidecar(sidecar).mode == OutputMode::kEnergetic;
  } catch (const Error& e) {
    spdlog::warn("ignoring unreadable sidecar {}: {}", sidecar.string(), e.what());
    return false;
  }
}

std::string Cell(const Measured<double>& m, double scale, int precision) {
  if (m.value) return fmt::format("{:.{}f}", *m.value * scale, precision);
  return m.error ? std::string(ToString(*m.error)) : "-";
}

json RowJson(const Row& row) {
  json j{{"file", row.file}};
  if (!row.measured) {
    j["error"] = row.error;
    return j;
  }
  j["domain"] = row.energetic ? "energetic" : "pressure";
  json errors = json::object();
  const MeasuredParams& m = *row.measured;
  const std::pair<const char*, const Measured<double>*> fields[] = {
      {"rt60_s", &m.rt60}, {"edt_s", &m.edt},         {"drr_db", &m.drr},
      {"itdg_s", &m.itdg}, {"fit_quality", &m.fit_quality}};
  for (const auto& [key, field] : fields) {
    if (field->value) {
      j[key] = *field->value;
    } else if (field->error) {
      errors[key] = std::string(ToString(*field->error));
    }
  }
  if (!errors.empty()) j["errors"] = errors;
  return j;
}

}  // namespace

int RunMeasure(const MeasureOptions& options, std::ostream& out) {
  if (options.paths.empty()) {
    spdlog::error("measure needs at least one file");
    return kExitConfigError;
  }
  std::vector<Row> rows;
  std::size_t failed = 0;
  for (const auto& path : options.paths) {
    Row row;
    row.file = path.string();
    try {
      const AudioBuffer audio = ReadWav(path);
      row.energetic = options.energetic || SidecarSaysEnergetic(path);
      PressureImpulseResponse rir{audio.samples(), audio.sample_rate()};
      if (row.energetic) {
        // Metrics square their input; energies map back through sqrt.
        for (double& x : rir.amplitudes) x = std::sqrt(std::max(0.0, x));
      }
      row.measured = MeasureAll(rir);
    } catch (const Error& e) {
      row.error = std::string(ToString(e.code()));
      spdlog::warn("{}: {}", row.file, e.what());
      ++failed;
    }
    rows.push_back(std::move(row));
  }

  if (options.json) {
    json j = json::array();
    for (const Row& row : rows) j.push_back(RowJson(row));
    out << j.dump(2) << "\n";
  } else {
    out << fmt::format("{:<40} {:>10} {:>10} {:>9} {:>9} {:>8}\n", "file", "rt60[s]",
                       "edt[s]", "drr[dB]", "itdg[ms]", "fit");
    for (const Row& row : rows) {
      if (!row.measured) {
        out << fmt::format("{:<40} {}\n", row.file, row.error);
        continue;
      }
      const MeasuredParams& m = *row.measured;
      out << fmt::format("{:<40} {:>10} {:>10} {:>9} {:>9} {:>8}\n", row.file,
                         Cell(m.rt60, 1.0, 4), Cell(m.edt, 1.0, 4), Cell(m.drr, 1.0, 2),
                         Cell(m.itdg, 1000.0, 2), Cell(m.fit_quality, 1.0, 4));
    }
  }
  return failed == rows.size() ? kExitFailure : kExitOk;
}

}  // namespace rirsynth::cli
