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

// Monte Carlo emulator of the photon-counting experiment.
//
// Per measurement period: wave-plate angles are jittered, the two photons
// are prepared from |H> by their recipes, the analyzer mixture
// M(x) * quantum + (1 - M(x)) * distinguishable gives the distribution over
// output-mode pairs, a Poisson number of pairs is generated, each photon is
// detected with probability `detector_efficiency`, and registered pairs are
// classified. Dark counts form accidental two-detector coincidences inside
// the coincidence window.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "progmeas/analyzer.hpp"
#include "progmeas/counts.hpp"
#include "progmeas/polarization.hpp"
#include "progmeas/random.hpp"

namespace progmeas {

class Dataset;

struct ExperimentConfig {
    double pair_rate = 1.0e5;             // pairs / s
    double period = 1.0;                  // s
    int repetitions = 10;                 // measurement periods per setting
    double detector_efficiency = 0.5;     // per photon
    double dark_count_rate = 100.0;       // counts / s / detector
    double coincidence_window = 10.0e-9;  // s
    AnalyzerConfig analyzer{.mode_overlap = 0.92};
    double dip_sigma = 35.0;           // um
    double shoulder_position = 150.0;  // um
    double angle_jitter = 1.0;         // deg, uniform +-, per plate and period
    std::uint64_t seed = 1;

    void validate() const;

    double pairs_per_setting() const {
        return pair_rate * period * repetitions;
    }
    /// Adjusts pair_rate so that one setting generates `pairs` pairs on
    /// average over all repetitions.
    void set_pairs_per_setting(double pairs);

    /// Unit efficiency, no darks, M0 = 1, 50/50 splitter, no jitter.
    static ExperimentConfig ideal();
};

/// Wave-plate recipes for the data and program photons.
struct InputSetting {
    PrepRecipe data;
    PrepRecipe program;
};

/// Tallies of one input setting over all repetitions.
struct SettingCounts {
    std::uint64_t pairs = 0;         // generated
    std::uint64_t psi_plus = 0;      // includes accidentals
    std::uint64_t psi_minus = 0;     // includes accidentals
    std::uint64_t inconclusive = 0;  // both photons detected, non-Psi pattern
    std::uint64_t accidentals = 0;   // dark-dark coincidences landing in Psi+/Psi-

    bool operator==(const SettingCounts &) const = default;
};

/// Gaussian dip model M0 * exp(-x^2 / (2 sigma^2)).
double mode_overlap_at(double position, const ExperimentConfig &config);

SettingCounts simulate_counts(const InputSetting &setting, double position, const ExperimentConfig &config,
                              RandomEngine &rng);

/// Data at +-45 deg (sign), program at +45 deg, mirror on the shoulder.
InputSetting shoulder_setting(Sign sign);
SettingCounts shoulder_counts(Sign sign, const ExperimentConfig &config, RandomEngine &rng);

/// Main and shoulder tallies of one sweep point, measured in the order
/// shoulder(+), main(+), main(-), shoulder(-).
struct PointMeasurement {
    SettingCounts main_plus;
    SettingCounts main_minus;
    SettingCounts shoulder_plus;
    SettingCounts shoulder_minus;

    CountRecord record() const;
};

PointMeasurement measure_point(const InputSetting &plus, const InputSetting &minus, const ExperimentConfig &config,
                               std::uint64_t point_index);

struct HomRow {
    double position = 0.0;
    double mode_overlap = 0.0;
    /// Rates in counts/s: pp = Psi+ class at 45/45,
    /// pm = Psi+ class at -45/45, mp = Psi- class at 45/45, mm = Psi- class
    /// at -45/45.
    double rate_pp = 0.0;
    double rate_pm = 0.0;
    double rate_mp = 0.0;
    double rate_mm = 0.0;
    CountRecord counts;  // c_* fields only
};

/// Least-squares fit of baseline * (1 - V exp(-(x - x0)^2 / (2 s^2))).
struct DipFit {
    double baseline = 0.0;
    double visibility = 0.0;
    double center = 0.0;
    double sigma = 0.0;
};

std::optional<DipFit> fit_dip(std::span<const double> positions, std::span<const double> rates);

struct HomScanResult {
    std::vector<HomRow> rows;
    std::optional<DipFit> fit_pm;  // dipping curve for -45/45 inputs
    std::optional<DipFit> fit_mp;  // dipping curve for 45/45 inputs

    /// Mean of the two fitted visibilities, if both fits exist.
    std::optional<double> visibility() const;
};

HomScanResult hom_scan(std::span<const double> positions, const ExperimentConfig &config);

struct DiscriminatorGrid {
    std::vector<double> epsilons;
    std::vector<double> thetas;
};

struct MultimeterGrid {
    std::vector<double> phis;
    double eta = 1.0;
    int program_copies = 1;
};

Dataset run_full_experiment(const DiscriminatorGrid &grid, const ExperimentConfig &config);
Dataset run_full_experiment(const MultimeterGrid &grid, const ExperimentConfig &config);

/// Runs body(i) for i in [0, count) on a small thread pool. Each index is
/// handled exactly once; body must not share mutable state across indices.
template <typename Body>
void parallel_for(std::size_t count, Body &&body);

}  // namespace progmeas

#include "progmeas/detail/parallel.hpp"
