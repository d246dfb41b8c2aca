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

#include <fstream>
#include <map>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <nlohmann/json.hpp>
#include <spdlog/spdlog.h>

#include "cli/commands.hpp"
#include "rirsynth/dsp.hpp"
#include "rirsynth/errors.hpp"
#include "rirsynth/random.hpp"
#include "rirsynth/wav.hpp"

namespace rirsynth::cli {

using nlohmann::json;

std::vector<std::filesystem::path> ListWavFiles(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    std::string ext = entry.path().extension().string();
    for (char& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (ext == ".wav") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end(), [](const auto& a, const auto& b) {
    return a.filename().string() < b.filename().string();
  });
  return files;
}

std::size_t PairedRirIndex(std::uint64_t seed, std::size_t input_index,
                           std::size_t rir_count) {
  return static_cast<std::size_t>(DeriveSeed(seed, input_index) % rir_count);
}

int RunAugment(const AugmentOptions& options, std::ostream& out) {
  std::vector<std::filesystem::path> inputs;
  std::vector<std::filesystem::path> rirs;
  for (const auto& [dir, list] : {std::pair{&options.in_dir, &inputs},
                                  std::pair{&options.rir_dir, &rirs}}) {
    if (!std::filesystem::is_directory(*dir)) {
      spdlog::error("{} is not a directory", dir->string());
      return kExitConfigError;
    }
    *list = ListWavFiles(*dir);
    if (list->empty()) {
      spdlog::error("no .wav files in {}", dir->string());
      return kExitConfigError;
    }
  }
  std::error_code ec;
  std::filesystem::create_directories(options.out_dir, ec);
  if (ec || !std::filesystem::is_directory(options.out_dir)) {
    spdlog::error("cannot create output directory {}", options.out_dir.string());
    return kExitConfigError;
  }

  std::map<std::size_t, AudioBuffer> rir_cache;
  json pairs = json::array();
  json skipped = json::array();
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const std::size_t k = PairedRirIndex(options.seed, i, rirs.size());
    const std::string input_name = inputs[i].filename().string();
    const std::string output_name = fmt::format("{}__rir{}.wav", inputs[i].stem().string(), k);
    try {
      const AudioBuffer audio = ReadWav(inputs[i]);
      auto cached = rir_cache.find(k);
      if (cached == rir_cache.end()) cached = rir_cache.emplace(k, ReadWav(rirs[k])).first;
      const AudioBuffer& rir = cached->second;
      if (audio.sample_rate() != rir.sample_rate()) {
        throw Error(ErrorCode::kSampleRateMismatch,
                    fmt::format("{} is {} Hz but {} is {} Hz", input_name,
                                audio.sample_rate(), rirs[k].filename().string(),
                                rir.sample_rate()));
      }
      const AudioBuffer wet(ConvolveSamples(audio.samples(), rir.samples()),
                            audio.sample_rate());
      const double gain_db = PeakNormalizationGainDb(wet, options.peak_dbfs);
      if (PeakAbs(wet.samples()) > 1.0) {
        spdlog::info("{}: convolved peak exceeds full scale, normalizing", output_name);
      }
      WriteWav(options.out_dir / output_name, NormalizePeak(wet, options.peak_dbfs),
               WavFormat::kPcm16);
      pairs.push_back({{"input", input_name},
                       {"input_index", i},
                       {"rir", rirs[k].filename().string()},
                       {"rir_index", k},
                       {"output", output_name},
                       {"applied_gain_db", gain_db}});
    } catch (const Error& e) {
      spdlog::warn("skipping {}: {}", input_name, e.what());
      skipped.push_back({{"input", input_name},
                         {"input_index", i},
                         {"error", std::string(ToString(e.code()))},
                         {"message", e.what()}});
    }
  }

  json manifest{{"schema_version", 1},
                {"tool_version", std::string(ToolVersion())},
                {"seed", options.seed},
                {"peak_dbfs", options.peak_dbfs},
                {"pairing_rule", "rir_index = DeriveSeed(seed, input_index) mod rir_count; "
                                 "inputs and rirs sorted by file name"},
                {"rir_count", rirs.size()},
                {"pairs", std::move(pairs)},
                {"skipped", skipped}};
  std::ofstream file(options.out_dir / "augment_manifest.json",
                     std::ios::binary | std::ios::trunc);
  file << manifest.dump(2) << "\n";
  if (!file) {
    spdlog::error("cannot write augment_manifest.json");
    return kExitFailure;
  }
  out << json{{"inputs", inputs.size()},
              {"written", inputs.size() - skipped.size()},
              {"skipped", skipped.size()}}
             .dump(2)
      << "\n";
  return skipped.empty() ? kExitOk : kExitFailure;
}

}  // namespace rirsynth::cli
