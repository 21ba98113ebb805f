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

#include "progmeas/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "progmeas/config.hpp"
#include "progmeas/dataset.hpp"
#include "progmeas/discriminator.hpp"
#include "progmeas/errors.hpp"
#include "progmeas/multimeter.hpp"
#include "progmeas/twophoton.hpp"

namespace progmeas {

namespace {

enum StreamTag : std::uint64_t {
    kShoulderPlus = 1,
    kMainPlus = 2,
    kMainMinus = 3,
    kShoulderMinus = 4,
    kHomPlus = 11,
    kHomMinus = 12,
};

void require(bool ok, const std::string &message) {
    if (!ok) {
        throw InvalidArgument(message);
    }
}

using Binomial = std::binomial_distribution<std::uint64_t>;
using Poisson = std::poisson_distribution<std::uint64_t>;

std::uint64_t draw_poisson(double mean, RandomEngine &rng) {
    return mean > 0.0 ? Poisson(mean)(rng) : 0;
}

std::uint64_t draw_binomial(std::uint64_t n, double p, RandomEngine &rng) {
    if (n == 0 || p <= 0.0) {
        return 0;
    }
    if (p >= 1.0) {
        return n;
    }
    return Binomial(n, p)(rng);
}

void tally(SettingCounts &counts, Outcome outcome, std::uint64_t n) {
    switch (outcome) {
        case Outcome::PsiPlus:
            counts.psi_plus += n;
            break;
        case Outcome::PsiMinus:
            counts.psi_minus += n;
            break;
        case Outcome::Inconclusive:
            counts.inconclusive += n;
            break;
    }
}

double rate_of(std::uint64_t c, const ExperimentConfig &config) {
    return static_cast<double>(c) / (config.period * config.repetitions);
}

}  // namespace

void ExperimentConfig::validate() const {
    require(std::isfinite(pair_rate) && pair_rate >= 0.0, "pair_rate must be finite and nonnegative");
    require(std::isfinite(period) && period > 0.0, "period must be positive");
    require(repetitions >= 1, "repetitions must be at least 1");
    require(detector_efficiency >= 0.0 && detector_efficiency <= 1.0, "detector_efficiency must lie in [0, 1]");
    require(std::isfinite(dark_count_rate) && dark_count_rate >= 0.0, "dark_count_rate must be nonnegative");
    require(std::isfinite(coincidence_window) && coincidence_window >= 0.0,
            "coincidence_window must be nonnegative");
    require(std::isfinite(dip_sigma) && dip_sigma > 0.0, "dip_sigma must be positive");
    require(std::isfinite(shoulder_position), "shoulder_position must be finite");
    require(std::isfinite(angle_jitter) && angle_jitter >= 0.0, "angle_jitter must be nonnegative");
    analyzer.validate();
}

void ExperimentConfig::set_pairs_per_setting(double pairs) {
    require(std::isfinite(pairs) && pairs >= 0.0, "pairs per setting must be nonnegative");
    pair_rate = pairs / (period * repetitions);
}

ExperimentConfig ExperimentConfig::ideal() {
    ExperimentConfig c;
    c.detector_efficiency = 1.0;
    c.dark_count_rate = 0.0;
    c.analyzer = AnalyzerConfig::ideal();
    c.angle_jitter = 0.0;
    return c;
}

double mode_overlap_at(double position, const ExperimentConfig &config) {
    require(config.dip_sigma > 0.0, "dip_sigma must be positive");
    const double z = position / config.dip_sigma;
    return config.analyzer.mode_overlap * std::exp(-0.5 * z * z);
}

SettingCounts simulate_counts(const InputSetting &setting, double position, const ExperimentConfig &config,
                              RandomEngine &rng) {
    config.validate();
    const double overlap_here = mode_overlap_at(position, config);
    const double pairs_per_period = config.pair_rate * config.period;
    const double p_register = config.detector_efficiency * config.detector_efficiency;
    const double accidental_mean =
        2.0 * config.dark_count_rate * config.dark_count_rate * config.coincidence_window * config.period;

    std::array<Outcome, kNumModePairs> outcome_of_pair{};
    for (std::size_t k = 0; k < kNumModePairs; ++k) {
        const auto [m, n] = mode_pair(k);
        const auto &map = config.analyzer.detector_map.detector_of_mode;
        outcome_of_pair[k] = classify(CoincidencePattern(map[m], map[n]));
    }

    std::uniform_real_distribution<double> jitter(-config.angle_jitter, config.angle_jitter);
    SettingCounts counts;
    for (int rep = 0; rep < config.repetitions; ++rep) {
        InputSetting actual = setting;
        if (config.angle_jitter > 0.0) {
            actual.data.qwp_angle += jitter(rng);
            actual.data.hwp_angle += jitter(rng);
            actual.program.qwp_angle += jitter(rng);
            actual.program.hwp_angle += jitter(rng);
        }
        const auto state = tensor(actual.data.prepare(), actual.program.prepare());
        const auto dist = mixed_pattern_probs(state, config.analyzer, overlap_here);

        const std::uint64_t generated = draw_poisson(pairs_per_period, rng);
        counts.pairs += generated;
        std::uint64_t remaining = draw_binomial(generated, p_register, rng);
        double remaining_mass = 1.0;
        for (std::size_t k = 0; k < kNumModePairs && remaining > 0; ++k) {
            const double p = std::max(0.0, dist[k]);
            const std::uint64_t n =
                k + 1 == kNumModePairs ? remaining : draw_binomial(remaining, p / remaining_mass, rng);
            tally(counts, outcome_of_pair[k], n);
            remaining -= n;
            remaining_mass = std::max(0.0, remaining_mass - p);
            if (remaining_mass <= 0.0) {
                // Rounding left mass-less categories; nothing can land there.
                tally(counts, Outcome::Inconclusive, remaining);
                remaining = 0;
            }
        }

        for (int i = 0; i < 4; ++i) {
            for (int j = i + 1; j < 4; ++j) {
                const auto outcome = classify(CoincidencePattern(static_cast<Detector>(i), static_cast<Detector>(j)));
                if (outcome == Outcome::Inconclusive) {
                    continue;
                }
                const std::uint64_t n = draw_poisson(accidental_mean, rng);
                tally(counts, outcome, n);
                counts.accidentals += n;
            }
        }
    }
    return counts;
}

InputSetting shoulder_setting(Sign sign) {
    return {recipe_linear(sign_value(sign) * 45.0), recipe_linear(45.0)};
}

SettingCounts shoulder_counts(Sign sign, const ExperimentConfig &config, RandomEngine &rng) {
    return simulate_counts(shoulder_setting(sign), config.shoulder_position, config, rng);
}

CountRecord PointMeasurement::record() const {
    CountRecord r;
    r.c_pp = main_plus.psi_plus;
    r.c_mp = main_plus.psi_minus;
    r.c_pm = main_minus.psi_plus;
    r.c_mm = main_minus.psi_minus;
    r.sh_pp = shoulder_plus.psi_plus;
    r.sh_mp = shoulder_plus.psi_minus;
    r.sh_pm = shoulder_minus.psi_plus;
    r.sh_mm = shoulder_minus.psi_minus;
    return r;
}

PointMeasurement measure_point(const InputSetting &plus, const InputSetting &minus, const ExperimentConfig &config,
                               std::uint64_t point_index) {
    PointMeasurement m;
    auto rng = make_stream(config.seed, point_index, kShoulderPlus);
    m.shoulder_plus = shoulder_counts(Sign::Plus, config, rng);
    rng = make_stream(config.seed, point_index, kMainPlus);
    m.main_plus = simulate_counts(plus, 0.0, config, rng);
    rng = make_stream(config.seed, point_index, kMainMinus);
    m.main_minus = simulate_counts(minus, 0.0, config, rng);
    rng = make_stream(config.seed, point_index, kShoulderMinus);
    m.shoulder_minus = shoulder_counts(Sign::Minus, config, rng);
    return m;
}

std::optional<DipFit> fit_dip(std::span<const double> positions, std::span<const double> rates) {
    if (positions.size() != rates.size()) {
        throw InvalidArgument("fit_dip: positions and rates differ in length");
    }
    if (positions.size() < 4) {
        return std::nullopt;
    }
    const auto [lo_it, hi_it] = std::minmax_element(positions.begin(), positions.end());
    const double lo = *lo_it;
    const double hi = *hi_it;
    const double span = hi - lo;
    if (!(span > 0.0)) {
        return std::nullopt;
    }

    // For fixed (center, sigma) the model is linear in (baseline, depth):
    // r = baseline - depth * g(x). Solve that exactly, search the rest.
    struct Candidate {
        double sse = std::numeric_limits<double>::infinity();
        DipFit fit;
    };
    auto evaluate = [&](double center, double sigma) {
        double sg = 0, sgg = 0, sr = 0, srg = 0;
        const double n = static_cast<double>(positions.size());
        for (std::size_t i = 0; i < positions.size(); ++i) {
            const double z = (positions[i] - center) / sigma;
            const double g = std::exp(-0.5 * z * z);
            sg += g;
            sgg += g * g;
            sr += rates[i];
            srg += rates[i] * g;
        }
        const double det = n * sgg - sg * sg;
        Candidate c;
        if (std::abs(det) < 1e-12 * n * n) {
            return c;
        }
        const double baseline = (sr * sgg - sg * srg) / det;
        const double depth = (sr * sg - n * srg) / det;
        double sse = 0;
        for (std::size_t i = 0; i < positions.size(); ++i) {
            const double z = (positions[i] - center) / sigma;
            const double resid = rates[i] - (baseline - depth * std::exp(-0.5 * z * z));
            sse += resid * resid;
        }
        c.sse = sse;
        c.fit = {baseline, baseline != 0.0 ? depth / baseline : 0.0, center, sigma};
        return c;
    };

    double c_lo = lo, c_hi = hi;
    double log_s_lo = std::log(span / (8.0 * static_cast<double>(positions.size())));
    double log_s_hi = std::log(span);
    Candidate best;
    constexpr int kGrid = 33;
    for (int round = 0; round < 40; ++round) {
        for (int i = 0; i < kGrid; ++i) {
            const double center = c_lo + (c_hi - c_lo) * i / (kGrid - 1);
            for (int k = 0; k < kGrid; ++k) {
                const double sigma = std::exp(log_s_lo + (log_s_hi - log_s_lo) * k / (kGrid - 1));
                const auto c = evaluate(center, sigma);
                if (c.sse < best.sse) {
                    best = c;
                }
            }
        }
        const double c_half = (c_hi - c_lo) / 8.0;
        const double s_half = (log_s_hi - log_s_lo) / 8.0;
        c_lo = best.fit.center - c_half;
        c_hi = best.fit.center + c_half;
        log_s_lo = std::log(best.fit.sigma) - s_half;
        log_s_hi = std::log(best.fit.sigma) + s_half;
    }
    if (!std::isfinite(best.sse)) {
        return std::nullopt;
    }
    return best.fit;
}

std::optional<double> HomScanResult::visibility() const {
    if (!fit_pm || !fit_mp) {
        return std::nullopt;
    }
    return 0.5 * (fit_pm->visibility + fit_mp->visibility);
}

HomScanResult hom_scan(std::span<const double> positions, const ExperimentConfig &config) {
    config.validate();
    HomScanResult result;
    result.rows.resize(positions.size());
    parallel_for(positions.size(), [&](std::size_t i) {
        auto rng_plus = make_stream(config.seed, i, kHomPlus);
        auto rng_minus = make_stream(config.seed, i, kHomMinus);
        const auto plus = simulate_counts(shoulder_setting(Sign::Plus), positions[i], config, rng_plus);
        const auto minus = simulate_counts(shoulder_setting(Sign::Minus), positions[i], config, rng_minus);
        auto &row = result.rows[i];
        row.position = positions[i];
        row.mode_overlap = mode_overlap_at(positions[i], config);
        row.counts.c_pp = plus.psi_plus;
        row.counts.c_mp = plus.psi_minus;
        row.counts.c_pm = minus.psi_plus;
        row.counts.c_mm = minus.psi_minus;
        row.rate_pp = rate_of(plus.psi_plus, config);
        row.rate_mp = rate_of(plus.psi_minus, config);
        row.rate_pm = rate_of(minus.psi_plus, config);
        row.rate_mm = rate_of(minus.psi_minus, config);
    });
    std::vector<double> x, pm, mp;
    for (const auto &row : result.rows) {
        x.push_back(row.position);
        pm.push_back(row.rate_pm);
        mp.push_back(row.rate_mp);
    }
    result.fit_pm = fit_dip(x, pm);
    result.fit_mp = fit_dip(x, mp);
    return result;
}

namespace {

void append_counts(std::vector<double> &row, const CountRecord &c) {
    for (auto v : {c.c_pp, c.c_pm, c.c_mp, c.c_mm, c.sh_pp, c.sh_pm, c.sh_mp, c.sh_mm}) {
        row.push_back(static_cast<double>(v));
    }
}

std::vector<std::string> with_count_columns(std::vector<std::string> columns) {
    for (auto name : kCountColumns) {
        columns.emplace_back(name);
    }
    return columns;
}

}  // namespace

Dataset run_full_experiment(const DiscriminatorGrid &grid, const ExperimentConfig &config) {
    const auto points = run_discriminator_sweep(grid, config);
    Dataset dataset(with_count_columns({"epsilon", "theta", "p_theory", "p_optimal", "p_estimated", "p_std_error",
                                        "error_rate", "error_rate_std_error"}));
    auto &meta = dataset.metadata();
    meta["task"] = "discriminator";
    meta["config"] = to_json(config);
    meta["seed"] = config.seed;
    meta["point_errors"] = nlohmann::json::array();
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto &p = points[i];
        std::vector<double> row{p.epsilon,     p.theta,      p.p_theory,  p.p_optimal,
                                p.p_estimated, p.p_std_error, p.error_rate, p.error_rate_std_error};
        append_counts(row, p.counts);
        dataset.add_row(std::move(row));
        if (!p.error.empty()) {
            meta["point_errors"].push_back({{"row", i}, {"message", p.error}});
        }
    }
    return dataset;
}

Dataset run_full_experiment(const MultimeterGrid &grid, const ExperimentConfig &config) {
    const auto points = run_multimeter_sweep(grid, config);
    Dataset dataset(with_count_columns({"phi", "eta", "p_inconclusive_theory", "fidelity_theory", "p_inconclusive",
                                        "p_inconclusive_std_error", "fidelity", "fidelity_std_error", "error_rate",
                                        "error_rate_std_error"}));
    auto &meta = dataset.metadata();
    meta["task"] = "multimeter";
    meta["config"] = to_json(config);
    meta["seed"] = config.seed;
    meta["eta"] = grid.eta;
    meta["point_errors"] = nlohmann::json::array();
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto &p = points[i];
        std::vector<double> row{p.phi,
                                p.eta,
                                p.p_inconclusive_theory,
                                p.fidelity_theory,
                                p.p_inconclusive,
                                p.p_inconclusive_std_error,
                                p.fidelity,
                                p.fidelity_std_error,
                                p.error_rate,
                                p.error_rate_std_error};
        append_counts(row, p.counts);
        dataset.add_row(std::move(row));
        if (!p.error.empty()) {
            meta["point_errors"].push_back({{"row", i}, {"message", p.error}});
        }
    }
    return dataset;
}

}  // namespace progmeas
