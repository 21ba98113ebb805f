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

#include "progmeas/config.hpp"

#include <array>
#include <fstream>
#include <set>
#include <string>

#include "progmeas/errors.hpp"

namespace progmeas {

namespace {

using nlohmann::json;

constexpr std::array<const char *, 4> kModeNames{"1H", "1V", "2H", "2V"};

Detector parse_detector(const std::string &name) {
    for (int k = 0; k < 4; ++k) {
        if (name == to_string(static_cast<Detector>(k))) {
            return static_cast<Detector>(k);
        }
    }
    throw InvalidArgument("unknown detector '" + name + "' (expected D1..D4)");
}

void reject_unknown(const json &j, const std::set<std::string> &allowed, const std::string &where) {
    if (!j.is_object()) {
        throw InvalidArgument(where + " must be a JSON object");
    }
    for (const auto &item : j.items()) {
        if (!allowed.contains(item.key())) {
            throw InvalidArgument("unknown key '" + item.key() + "' in " + where);
        }
    }
}

template <typename T>
void read(const json &j, const char *key, T &target) {
    if (!j.contains(key)) {
        return;
    }
    try {
        target = j.at(key).get<T>();
    } catch (const json::exception &) {
        throw InvalidArgument(std::string("config key '") + key + "' has the wrong type");
    }
}

}  // namespace

json to_json(const ExperimentConfig &config) {
    json map = json::object();
    for (std::size_t m = 0; m < kModeNames.size(); ++m) {
        map[kModeNames[m]] = to_string(config.analyzer.detector_map.detector_of_mode[m]);
    }
    return {
        {"pair_rate", config.pair_rate},
        {"period", config.period},
        {"repetitions", config.repetitions},
        {"detector_efficiency", config.detector_efficiency},
        {"dark_count_rate", config.dark_count_rate},
        {"coincidence_window", config.coincidence_window},
        {"dip_sigma", config.dip_sigma},
        {"shoulder_position", config.shoulder_position},
        {"angle_jitter", config.angle_jitter},
        {"seed", config.seed},
        {"analyzer",
         {
             {"transmittance_h", config.analyzer.transmittance_h},
             {"transmittance_v", config.analyzer.transmittance_v},
             {"mode_overlap", config.analyzer.mode_overlap},
             {"geometric_phase", config.analyzer.geometric_phase},
             {"detector_map", map},
         }},
    };
}

ExperimentConfig config_from_json(const json &j, ExperimentConfig base) {
    reject_unknown(j,
                   {"pair_rate", "period", "repetitions", "detector_efficiency", "dark_count_rate",
                    "coincidence_window", "dip_sigma", "shoulder_position", "angle_jitter", "seed", "analyzer"},
                   "config");
    read(j, "pair_rate", base.pair_rate);
    read(j, "period", base.period);
    read(j, "repetitions", base.repetitions);
    read(j, "detector_efficiency", base.detector_efficiency);
    read(j, "dark_count_rate", base.dark_count_rate);
    read(j, "coincidence_window", base.coincidence_window);
    read(j, "dip_sigma", base.dip_sigma);
    read(j, "shoulder_position", base.shoulder_position);
    read(j, "angle_jitter", base.angle_jitter);
    read(j, "seed", base.seed);
    if (j.contains("analyzer")) {
        const auto &a = j.at("analyzer");
        reject_unknown(a, {"transmittance_h", "transmittance_v", "mode_overlap", "geometric_phase", "detector_map"},
                       "analyzer");
        read(a, "transmittance_h", base.analyzer.transmittance_h);
        read(a, "transmittance_v", base.analyzer.transmittance_v);
        read(a, "mode_overlap", base.analyzer.mode_overlap);
        read(a, "geometric_phase", base.analyzer.geometric_phase);
        if (a.contains("detector_map")) {
            const auto &m = a.at("detector_map");
            reject_unknown(m, {kModeNames.begin(), kModeNames.end()}, "detector_map");
            for (std::size_t k = 0; k < kModeNames.size(); ++k) {
                if (m.contains(kModeNames[k])) {
                    std::string name;
                    read(m, kModeNames[k], name);
                    base.analyzer.detector_map.detector_of_mode[k] = parse_detector(name);
                }
            }
        }
    }
    base.validate();
    return base;
}

ExperimentConfig load_config(const std::filesystem::path &path, ExperimentConfig base) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidArgument("cannot open config file '" + path.string() + "'");
    }
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error &e) {
        throw InvalidArgument("config file '" + path.string() + "' is not valid JSON: " + e.what());
    }
    return config_from_json(j, base);
}

}  // namespace progmeas
