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

// JSON configuration files for the experiment emulator. Every field is
// optional; missing fields keep their defaults and unknown keys are
// rejected so typos do not pass silently.
//
//   {
//     "pair_rate": 100000,          pairs per second
//     "period": 1.0,                seconds per measurement period
//     "repetitions": 10,            periods per setting
//     "detector_efficiency": 0.5,
//     "dark_count_rate": 100,       per detector, per second
//     "coincidence_window": 1e-8,   seconds
//     "dip_sigma": 35,              micrometers
//     "shoulder_position": 150,     micrometers
//     "angle_jitter": 1.0,          degrees, uniform +-
//     "seed": 1,
//     "analyzer": {
//       "transmittance_h": 0.5,
//       "transmittance_v": 0.5,
//       "mode_overlap": 0.92,
//       "geometric_phase": true,
//       "detector_map": {"1H": "D1", "1V": "D2", "2V": "D3", "2H": "D4"}
//     }
//   }

#pragma once

#include <nlohmann/json.hpp>

#include <filesystem>

#include "progmeas/experiment.hpp"

namespace progmeas {

nlohmann::json to_json(const ExperimentConfig &config);
/// Overlays `j` on `base`. Throws InvalidArgument on unknown keys, wrong
/// types or values failing ExperimentConfig::validate.
ExperimentConfig config_from_json(const nlohmann::json &j, ExperimentConfig base = {});
ExperimentConfig load_config(const std::filesystem::path &path, ExperimentConfig base = {});

}  // namespace progmeas
