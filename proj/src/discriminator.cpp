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

#include "progmeas/discriminator.hpp"

#include <cmath>
#include <limits>

#include "progmeas/errors.hpp"

namespace progmeas {

namespace {

double count(std::uint64_t c) {
    return static_cast<double>(c);
}

// Variance of k/s for independent Poisson k and s, first order.
double ratio_variance(double k, double s) {
    return k / (s * s) + k * k / (s * s * s);
}

}  // namespace

double success_prob_theory(double epsilon, double theta) {
    if (!(epsilon >= 0.0 && epsilon < 90.0)) {
        throw InvalidArgument("ellipticity angle must lie in [0, 90) degrees");
    }
    const double x = std::cos(deg_to_rad(epsilon));
    const double y = std::sin(deg_to_rad(epsilon));
    const double c = std::cos(deg_to_rad(theta));
    const double s = std::sin(deg_to_rad(theta));
    const double a2 = x * x * c * c + y * y * s * s;
    return 2.0 * (a2 - a2 * a2);
}

double optimal_prob(double epsilon, double theta) {
    const auto plus = prepare_elliptical(epsilon, theta, Sign::Plus);
    const auto minus = prepare_elliptical(epsilon, theta, Sign::Minus);
    return 1.0 - std::abs(overlap(plus, minus));
}

Estimate estimate_success(const CountRecord &counts) {
    const double s1 = count(counts.sh_pp) + count(counts.sh_mp);
    const double s2 = count(counts.sh_mm) + count(counts.sh_pm);
    if (s1 <= 0.0 || s2 <= 0.0) {
        throw InvalidNormalization("shoulder sum is zero; success probability cannot be normalized");
    }
    const double a = count(counts.c_pp);
    const double b = count(counts.c_mm);
    const double value = 0.5 * (a / (2.0 * s1) + b / (2.0 * s2));
    const double variance = (ratio_variance(a, s1) + ratio_variance(b, s2)) / 16.0;
    return {value, std::sqrt(variance)};
}

Estimate error_rate(const CountRecord &counts) {
    const double wrong = count(counts.c_mp) + count(counts.c_pm);
    const double total = wrong + count(counts.c_pp) + count(counts.c_mm);
    if (total <= 0.0) {
        throw NoData("no conclusive events; error rate undefined");
    }
    const double e = wrong / total;
    return {e, std::sqrt(e * (1.0 - e) / total)};
}

InputSetting discriminator_setting(double epsilon, double theta, Sign data_sign) {
    return {recipe_discriminator(epsilon, theta, data_sign), recipe_discriminator(epsilon, theta, Sign::Plus)};
}

std::vector<DiscriminationPoint> run_discriminator_sweep(const DiscriminatorGrid &grid,
                                                         const ExperimentConfig &config) {
    config.validate();
    const std::size_t n_theta = grid.thetas.size();
    std::vector<DiscriminationPoint> points(grid.epsilons.size() * n_theta);
    parallel_for(points.size(), [&](std::size_t index) {
        auto &point = points[index];
        point.epsilon = grid.epsilons[index / n_theta];
        point.theta = grid.thetas[index % n_theta];
        constexpr double nan = std::numeric_limits<double>::quiet_NaN();
        point.p_estimated = point.error_rate = nan;
        point.p_std_error = point.error_rate_std_error = nan;
        try {
            point.p_theory = success_prob_theory(point.epsilon, point.theta);
            point.p_optimal = optimal_prob(point.epsilon, point.theta);
            const auto measurement =
                measure_point(discriminator_setting(point.epsilon, point.theta, Sign::Plus),
                              discriminator_setting(point.epsilon, point.theta, Sign::Minus), config, index);
            point.counts = measurement.record();
        } catch (const Error &e) {
            point.p_theory = point.p_optimal = nan;
            point.error = e.what();
            return;
        }
        try {
            const auto p = estimate_success(point.counts);
            point.p_estimated = p.value;
            point.p_std_error = p.std_error;
        } catch (const Error &e) {
            point.error = e.what();
        }
        try {
            const auto e = error_rate(point.counts);
            point.error_rate = e.value;
            point.error_rate_std_error = e.std_error;
        } catch (const Error &e) {
            point.error += (point.error.empty() ? "" : "; ") + std::string(e.what());
        }
    });
    return points;
}

}  // namespace progmeas
