// Copyright 2026 The progmeas Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command implementations behind the `progmeas` executable. Each command
// returns the dataset it would write so the commands can be driven from
// tests without a subprocess.

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "progmeas/dataset.hpp"
#include "progmeas/experiment.hpp"

namespace progmeas::cli {

/// "start:stop:step", stop inclusive (within 1e-9 of a step). step > 0.
std::vector<double> parse_range(const std::string &text);
/// "a,b,c".
std::vector<double> parse_list(const std::string &text);

struct CommonOptions {
    std::optional<std::filesystem::path> config_path;
    std::optional<std::uint64_t> seed;
    std::optional<double> pairs;  // generated pairs per input setting
    bool ideal = false;
    std::string command_line;  // recorded in the metadata sidecar
};

/// Base = ideal() when `ideal`, else defaults; then the config file; then
/// --seed and --pairs.
ExperimentConfig resolve_config(const CommonOptions &options);

struct DiscriminateOptions {
    CommonOptions common;
    std::vector<double> epsilons{0.0, 12.0, 24.0, 36.0};
    std::string theta_range = "0:90:4";
};

struct MultimeterOptions {
    CommonOptions common;
    std::string phi_range = "-90:90:8";
    double eta = 1.0;
    int program_copies = 1;
};

struct HomScanOptions {
    CommonOptions common;
    std::optional<std::vector<double>> positions;
    std::string range = "-200:200:10";
};

struct AnalyzeOptions {
    std::filesystem::path input;
    std::string command_line;
};

Dataset cmd_discriminate(const DiscriminateOptions &options);
Dataset cmd_multimeter(const MultimeterOptions &options);
Dataset cmd_hom_scan(const HomScanOptions &options);
/// Recomputes every estimator from the eight count columns of `input`.
/// Throws SchemaError naming the first missing count column.
Dataset cmd_analyze(const AnalyzeOptions &options);

}  // namespace progmeas::cli
