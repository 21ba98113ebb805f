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

#include "progmeas/multimeter.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "progmeas/discriminator.hpp"
#include "progmeas/errors.hpp"
#include "progmeas/twophoton.hpp"

namespace progmeas {

namespace {

constexpr std::uint64_t kReinterpretPlusTag = 0x100;
constexpr std::uint64_t kReinterpretMinusTag = 0x101;

void require_eta(double eta) {
    if (!(eta >= 0.0 && eta <= 1.0)) {
        throw InvalidArgument("eta must lie in [0, 1], got " + std::to_string(eta));
    }
}

Eigen::Matrix4cd projector(BellState b) {
    const Eigen::Vector4cd v = bell_vector(b);
    return v * v.adjoint();
}

Eigen::Matrix2cd projector(const PolarizationState &s) {
    return s.vector() * s.vector().adjoint();
}

double count(std::uint64_t c) {
    return static_cast<double>(c);
}

double ratio_variance(double k, double s) {
    return k / (s * s) + k * k / (s * s * s);
}

}  // namespace

bool is_hermitian(const Eigen::MatrixXcd &m, double tolerance) {
    return m.rows() == m.cols() && (m - m.adjoint()).cwiseAbs().maxCoeff() <= tolerance;
}

bool is_positive_semidefinite(const Eigen::MatrixXcd &m, double tolerance) {
    if (!is_hermitian(m, tolerance)) {
        return false;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff() >= -tolerance;
}

MultimeterPovm povm_elements(double eta) {
    require_eta(eta);
    const Eigen::Matrix4cd phi_block = projector(BellState::PhiPlus) + projector(BellState::PhiMinus);
    const double leak = (1.0 - eta) / 2.0;
    return {
        {projector(BellState::PsiPlus) + leak * phi_block},
        {projector(BellState::PsiMinus) + leak * phi_block},
        {eta * phi_block},
    };
}

double theory_PI(double eta) {
    require_eta(eta);
    return eta / 2.0;
}

double fidelity_from_PI(double p_inconclusive) {
    if (!(p_inconclusive >= 0.0 && p_inconclusive < 1.0)) {
        throw InvalidArgument("inconclusive probability must lie in [0, 1), got " + std::to_string(p_inconclusive));
    }
    return (3.0 - 2.0 * p_inconclusive) / (4.0 * (1.0 - p_inconclusive));
}

double equatorial_phase(const PolarizationState &state, double tolerance) {
    const double half = 0.5;
    if (std::abs(std::norm(state.h()) - half) > tolerance || std::abs(std::norm(state.v()) - half) > tolerance) {
        throw InvalidArgument("program state is not on the equator of the Bloch sphere");
    }
    return std::arg(state.v() / state.h()) * 180.0 / std::numbers::pi;
}

DataQubitPovm effective_povm(const PolarizationState &program, double eta) {
    equatorial_phase(program);
    const auto povm = povm_elements(eta);
    const auto &p = program.vector();
    auto contract = [&](const Eigen::Matrix4cd &big) {
        Eigen::Matrix2cd out = Eigen::Matrix2cd::Zero();
        for (int d = 0; d < 2; ++d) {
            for (int dp = 0; dp < 2; ++dp) {
                for (int q = 0; q < 2; ++q) {
                    for (int qp = 0; qp < 2; ++qp) {
                        out(d, dp) += std::conj(p(q)) * big(2 * d + q, 2 * dp + qp) * p(qp);
                    }
                }
            }
        }
        return out;
    };
    return {contract(povm.plus.matrix), contract(povm.minus.matrix), contract(povm.inconclusive.matrix)};
}

DataQubitPovm effective_povm_closed_form(double phi, double eta) {
    const double p_i = theory_PI(eta);
    const double f = fidelity_from_PI(p_i);
    const Eigen::Matrix2cd plus = projector(prepare_equatorial(phi, Sign::Plus));
    const Eigen::Matrix2cd minus = projector(prepare_equatorial(phi, Sign::Minus));
    return {
        (1.0 - p_i) * (f * plus + (1.0 - f) * minus),
        (1.0 - p_i) * (f * minus + (1.0 - f) * plus),
        p_i * Eigen::Matrix2cd::Identity(),
    };
}

std::vector<Outcome> reinterpret(std::span<const Outcome> outcomes, double eta, RandomEngine &rng) {
    require_eta(eta);
    std::bernoulli_distribution keep(eta);
    std::bernoulli_distribution coin(0.5);
    std::vector<Outcome> out;
    out.reserve(outcomes.size());
    for (auto o : outcomes) {
        if (o != Outcome::Inconclusive || keep(rng)) {
            out.push_back(o);
        } else {
            out.push_back(coin(rng) ? Outcome::PsiPlus : Outcome::PsiMinus);
        }
    }
    return out;
}

SettingCounts reinterpret_counts(const SettingCounts &counts, double eta, RandomEngine &rng) {
    require_eta(eta);
    using Binomial = std::binomial_distribution<std::uint64_t>;
    SettingCounts out = counts;
    const std::uint64_t kept = eta >= 1.0 ? counts.inconclusive : Binomial(counts.inconclusive, eta)(rng);
    const std::uint64_t relabeled = counts.inconclusive - kept;
    const std::uint64_t to_plus = relabeled == 0 ? 0 : Binomial(relabeled, 0.5)(rng);
    out.inconclusive = kept;
    out.psi_plus += to_plus;
    out.psi_minus += relabeled - to_plus;
    return out;
}

Estimate estimate_PI(const CountRecord &counts) {
    const double s1 = count(counts.sh_pp) + count(counts.sh_mp);
    const double s2 = count(counts.sh_mm) + count(counts.sh_pm);
    if (s1 <= 0.0 || s2 <= 0.0) {
        throw InvalidNormalization("shoulder sum is zero; inconclusive rate cannot be normalized");
    }
    const double a = count(counts.c_pp) + count(counts.c_mp);
    const double b = count(counts.c_mm) + count(counts.c_pm);
    const double value = 1.0 - 0.5 * (a / (2.0 * s1) + b / (2.0 * s2));
    const double variance = (ratio_variance(a, s1) + ratio_variance(b, s2)) / 16.0;
    return {value, std::sqrt(variance)};
}

Estimate estimate_fidelity(const CountRecord &counts) {
    const double n_plus = count(counts.c_pp) + count(counts.c_mp);
    const double n_minus = count(counts.c_mm) + count(counts.c_pm);
    if (n_plus <= 0.0 || n_minus <= 0.0) {
        throw NoData("no conclusive events for one of the data inputs; fidelity undefined");
    }
    const double f_plus = count(counts.c_pp) / n_plus;
    const double f_minus = count(counts.c_mm) / n_minus;
    const double variance = 0.25 * (f_plus * (1.0 - f_plus) / n_plus + f_minus * (1.0 - f_minus) / n_minus);
    return {0.5 * (f_plus + f_minus), std::sqrt(variance)};
}

InputSetting multimeter_setting(double phi, Sign data_sign) {
    return {recipe_multimeter(phi, data_sign), recipe_multimeter(phi, Sign::Plus)};
}

std::vector<MultimeterPoint> run_multimeter_sweep(const MultimeterGrid &grid, const ExperimentConfig &config) {
    if (grid.program_copies != 1) {
        throw UnsupportedFeature("only single-copy programs are implemented, got " +
                                 std::to_string(grid.program_copies) + " copies");
    }
    require_eta(grid.eta);
    config.validate();
    std::vector<MultimeterPoint> points(grid.phis.size());
    parallel_for(points.size(), [&](std::size_t index) {
        auto &point = points[index];
        point.phi = grid.phis[index];
        point.eta = grid.eta;
        point.p_inconclusive_theory = theory_PI(grid.eta);
        point.fidelity_theory = fidelity_from_PI(point.p_inconclusive_theory);
        constexpr double nan = std::numeric_limits<double>::quiet_NaN();
        point.p_inconclusive = point.fidelity = point.error_rate = nan;
        point.p_inconclusive_std_error = point.fidelity_std_error = point.error_rate_std_error = nan;

        auto measurement = measure_point(multimeter_setting(point.phi, Sign::Plus),
                                         multimeter_setting(point.phi, Sign::Minus), config, index);
        auto rng_plus = make_stream(config.seed, index, kReinterpretPlusTag);
        auto rng_minus = make_stream(config.seed, index, kReinterpretMinusTag);
        measurement.main_plus = reinterpret_counts(measurement.main_plus, grid.eta, rng_plus);
        measurement.main_minus = reinterpret_counts(measurement.main_minus, grid.eta, rng_minus);
        point.counts = measurement.record();

        auto note = [&](const Error &e) { point.error += (point.error.empty() ? "" : "; ") + std::string(e.what()); };
        try {
            const auto p = estimate_PI(point.counts);
            point.p_inconclusive = p.value;
            point.p_inconclusive_std_error = p.std_error;
        } catch (const Error &e) {
            note(e);
        }
        try {
            const auto f = estimate_fidelity(point.counts);
            point.fidelity = f.value;
            point.fidelity_std_error = f.std_error;
        } catch (const Error &e) {
            note(e);
        }
        try {
            const auto e = error_rate(point.counts);
            point.error_rate = e.value;
            point.error_rate_std_error = e.std_error;
        } catch (const Error &e) {
            note(e);
        }
    });
    return points;
}

}  // namespace progmeas
