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

// rirsynth: generate stochastic room impulse responses, augment audio with
// them, and measure RT60 / EDT / DRR / ITDG of impulse response files.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "cli/commands.hpp"
#include "cli/config.hpp"
#include "rirsynth/errors.hpp"

namespace {

using namespace rirsynth;
using namespace rirsynth::cli;

}  // namespace

int main(int argc, char** argv) {
  // stdout carries machine-readable output only.
  spdlog::set_default_logger(spdlog::stderr_color_mt("rirsynth"));
  spdlog::set_pattern("[%l] %v");

  CLI::App app{"Stochastic room impulse response toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ToolVersion()));

  // generate
  auto* generate = app.add_subcommand("generate", "Generate a dataset of RIR files");
  std::size_t count = 0;
  std::string out_dir;
  std::optional<std::string> config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> mode;
  std::optional<std::string> bands;
  bool validate = false;
  unsigned jobs = 1;
  generate->add_option("--count", count, "Number of responses")->required();
  generate->add_option("--out", out_dir, "Output directory")->required();
  generate->add_option("--config", config_path,
                       "JSON config file (default: $RIRSYNTH_CONFIG)");
  generate->add_option("--seed", seed, "Base seed");
  generate->add_option("--mode", mode, "energetic | pressure");
  generate->add_option("--bands", bands, "octave | third-octave");
  generate->add_flag("--validate", validate, "Measure every response and report errors");
  generate->add_option("--jobs", jobs, "Worker threads");

  // augment
  auto* augment = app.add_subcommand("augment", "Convolve audio files with RIRs");
  AugmentOptions augment_options;
  std::string in_dir, rir_dir, augment_out;
  augment->add_option("--in", in_dir, "Directory of input WAV files")->required();
  augment->add_option("--rirs", rir_dir, "Directory of RIR WAV files")->required();
  augment->add_option("--out", augment_out, "Output directory")->required();
  augment->add_option("--seed", augment_options.seed, "Pairing seed");
  augment->add_option("--peak-dbfs", augment_options.peak_dbfs,
                      "Output peak level after normalization");

  // measure
  auto* measure = app.add_subcommand("measure", "Measure acoustic parameters of RIR files");
  MeasureOptions measure_options;
  std::vector<std::string> paths;
  measure->add_option("paths", paths, "WAV files")->required();
  measure->add_flag("--json", measure_options.json, "Print JSON instead of a table");
  measure->add_flag("--energetic", measure_options.energetic,
                    "Treat samples as energies regardless of sidecars");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfigError;
  }

  try {
    if (*generate) {
      GenerateOptions options;
      if (auto path = ResolveConfigPath(config_path)) {
        options.config = LoadConfigFile(*path);
      }
      if (seed) options.config.ranges.base_seed = *seed;
      if (mode) options.config.mode = ParseOutputMode(*mode);
      if (bands) {
        options.config.bands = ParseBandKind(*bands);
        if (!mode) options.config.mode = OutputMode::kPressure;
      }
      options.count = count;
      options.out_dir = out_dir;
      options.validate = validate;
      options.jobs = jobs;
      return RunGenerate(options, std::cout);
    }
    if (*augment) {
      augment_options.in_dir = in_dir;
      augment_options.rir_dir = rir_dir;
      augment_options.out_dir = augment_out;
      return RunAugment(augment_options, std::cout);
    }
    for (const auto& p : paths) measure_options.paths.emplace_back(p);
    return RunMeasure(measure_options, std::cout);
  } catch (const ConfigError& e) {
    spdlog::error("{}", e.what());
    return kExitConfigError;
  } catch (const Error& e) {
    spdlog::error("{}", e.what());
    return e.code() == ErrorCode::kInvalidParams ? kExitConfigError : kExitFailure;
  }
}
