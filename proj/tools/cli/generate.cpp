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

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <nlohmann/json.hpp>
#include <spdlog/spdlog.h>

#include "cli/commands.hpp"
#include "cli/parallel.hpp"
#include "rirsynth/errors.hpp"
#include "rirsynth/generator.hpp"
#include "rirsynth/metrics.hpp"
#include "rirsynth/random.hpp"
#include "rirsynth/wav.hpp"

namespace rirsynth::cli {
namespace {

using nlohmann::json;

struct ItemResult {
  std::uint64_t index = 0;
  RirParams params;
  std::string file;
  std::optional<ErrorCode> error;
  std::string message;
  std::optional<MeasuredParams> measured;
};

double Median(std::vector<double> values) {
  if (values.empty()) return std::nan("");
  const std::size_t mid = values.size() / 2;
  std::nth_element(values.begin(), values.begin() + mid, values.end());
  const double upper = values[mid];
  if (values.size() % 2 == 1) return upper;
  const double lower = *std::max_element(values.begin(), values.begin() + mid);
  return 0.5 * (lower + upper);
}

json RangesJson(const ParamRanges& r) {
  return json{{"rt60_s", {r.rt60.min, r.rt60.max}},
              {"edt_s", {r.edt.min, r.edt.max}},
              {"itdg_s", {r.itdg.min, r.itdg.max}},
              {"drr_db", {r.drr.min, r.drr.max}},
              {"deviation_db", {r.deviation_db.min, r.deviation_db.max}},
              {"sample_rate_hz", r.sample_rate},
              {"seed", r.base_seed},
              {"early_deletion_probability", r.early_deletion_probability}};
}

// Requested-vs-measured error statistics over the validated items.
json ValidationSummary(const std::vector<ItemResult>& items) {
  std::vector<double> rt60_err;
  std::vector<double> edt_err;
  std::size_t measured = 0;
  std::size_t drr_below = 0;
  std::size_t itdg_below = 0;
  std::size_t field_errors = 0;
  for (const ItemResult& item : items) {
    if (!item.measured) continue;
    ++measured;
    const MeasuredParams& m = *item.measured;
    const RirParams& p = item.params;
    if (m.rt60.value) {
      rt60_err.push_back(std::abs(*m.rt60.value - p.rt60) / p.rt60);
    } else {
      ++field_errors;
    }
    if (m.edt.value) {
      edt_err.push_back(std::abs(*m.edt.value - p.edt) / p.edt);
    } else {
      ++field_errors;
    }
    if (!m.drr.value || *m.drr.value < p.drr_target - 1e-9) ++drr_below;
    if (!m.itdg.value || *m.itdg.value < p.itdg) ++itdg_below;
  }
  json v{{"measured_items", measured},
         {"drr_below_target", drr_below},
         {"itdg_below_request", itdg_below},
         {"decay_fit_failures", field_errors}};
  if (!rt60_err.empty()) {
    v["rt60_median_rel_error"] = Median(rt60_err);
    v["rt60_max_rel_error"] = *std::max_element(rt60_err.begin(), rt60_err.end());
  }
  if (!edt_err.empty()) v["edt_median_rel_error"] = Median(edt_err);
  return v;
}

}  // namespace

int RunGenerate(const GenerateOptions& options, std::ostream& out) {
  const GenerateConfig& cfg = options.config;
  if (options.count < 1) {
    spdlog::error("--count must be >= 1");
    return kExitConfigError;
  }
  if (options.jobs < 1) {
    spdlog::error("--jobs must be >= 1");
    return kExitConfigError;
  }
  if (cfg.bands && cfg.mode == OutputMode::kEnergetic) {
    spdlog::error("per-band generation produces pressure responses; use --mode pressure");
    return kExitConfigError;
  }

  std::optional<BandLayout> layout;
  std::vector<ItemResult> items(options.count);
  try {
    SampledBatch batch = SampleBatch(cfg.ranges, options.count);
    for (std::size_t i = 0; i < options.count; ++i) {
      items[i].index = batch.items[i].index;
      items[i].params = batch.items[i].params;
      items[i].file = fmt::format("rir_{:06d}.wav", i);
    }
    if (cfg.bands) {
      layout = LayoutFor(*cfg.bands, cfg.ranges.sample_rate);
      ValidateBandLayout(*layout, cfg.ranges.sample_rate);
    }
  } catch (const Error& e) {
    spdlog::error("{}", e.what());
    return kExitConfigError;
  }

  std::error_code ec;
  std::filesystem::create_directories(options.out_dir, ec);
  if (ec || !std::filesystem::is_directory(options.out_dir)) {
    spdlog::error("cannot create output directory {}", options.out_dir.string());
    return kExitConfigError;
  }

  std::atomic<std::size_t> done{0};
  const std::size_t report_every = std::max<std::size_t>(1, options.count / 10);
  ParallelFor(options.count, options.jobs, [&](std::size_t i) {
    ItemResult& item = items[i];
    try {
      PressureImpulseResponse pressure;
      std::vector<double> samples;
      if (layout) {
        pressure = GenerateMultibandRir(
            BandParamsFor(item.params, *layout, cfg.band_rt60_decay_per_octave), *layout);
        samples = pressure.amplitudes;
      } else {
        EnergeticImpulseResponse eir = GenerateRir(item.params);
        pressure = ToPressure(eir);
        samples = cfg.mode == OutputMode::kEnergetic ? std::move(eir.energies)
                                                     : pressure.amplitudes;
      }
      RirRecord record;
      record.file = item.file;
      record.requested = item.params;
      record.mode = cfg.mode;
      if (options.validate) {
        record.measured = MeasureAll(pressure);
        item.measured = record.measured;
      }
      const std::filesystem::path wav = options.out_dir / item.file;
      WriteWav(wav, samples, item.params.sample_rate, WavFormat::kFloat32);
      WriteSidecar(record, SidecarPathFor(wav));
    } catch (const Error& e) {
      item.error = e.code();
      item.message = e.what();
      spdlog::error("item {} (seed {}) failed: {}", item.index, item.params.seed, e.what());
    }
    const std::size_t finished = ++done;
    if (finished % report_every == 0 || finished == options.count) {
      spdlog::info("generated {}/{}", finished, options.count);
    }
  });

  std::size_t failed = 0;
  json manifest_items = json::array();
  for (const ItemResult& item : items) {
    json entry{{"index", item.index}, {"seed", item.params.seed}, {"file", item.file}};
    if (item.error) {
      ++failed;
      entry["status"] = "failed";
      entry["error"] = std::string(ToString(*item.error));
      entry["message"] = item.message;
    } else {
      entry["status"] = "ok";
    }
    manifest_items.push_back(std::move(entry));
  }
  json manifest{{"schema_version", kSidecarSchemaVersion},
                {"tool_version", std::string(ToolVersion())},
                {"count", options.count},
                {"mode", std::string(ToString(cfg.mode))},
                {"ranges", RangesJson(cfg.ranges)},
                {"items", std::move(manifest_items)}};
  if (cfg.bands) {
    manifest["bands"] = std::string(ToString(*cfg.bands));
    manifest["band_rt60_decay_per_octave"] = cfg.band_rt60_decay_per_octave;
  }
  {
    std::ofstream file(options.out_dir / "generate_manifest.json",
                       std::ios::binary | std::ios::trunc);
    file << manifest.dump(2) << "\n";
    if (!file) {
      spdlog::error("cannot write generate_manifest.json");
      return kExitFailure;
    }
  }

  json summary{{"count", options.count},
               {"succeeded", options.count - failed},
               {"failed", failed},
               {"out_dir", options.out_dir.string()}};
  if (options.validate) summary["validation"] = ValidationSummary(items);
  out << summary.dump(2) << "\n";
  return failed == 0 ? kExitOk : kExitFailure;
}

}  // namespace rirsynth::cli
