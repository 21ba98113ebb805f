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

#include "progmeas/polarization.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "progmeas/errors.hpp"

namespace progmeas {

namespace {

Eigen::Matrix2d rotation(double radians) {
    const double c = std::cos(radians);
    const double s = std::sin(radians);
    Eigen::Matrix2d r;
    r << c, -s, s, c;
    return r;
}

void require_epsilon(double epsilon) {
    if (!(epsilon >= 0.0 && epsilon < 90.0)) {
        throw InvalidArgument("ellipticity angle must lie in [0, 90) degrees, got " + std::to_string(epsilon));
    }
}

}  // namespace

double deg_to_rad(double degrees) {
    return degrees * std::numbers::pi / 180.0;
}

PolarizationState PolarizationState::from_amplitudes(Complex h, Complex v) {
    return from_vector(Eigen::Vector2cd(h, v));
}

PolarizationState PolarizationState::from_vector(const Eigen::Vector2cd &amplitudes) {
    const double norm = amplitudes.norm();
    if (!std::isfinite(norm) || norm == 0.0) {
        throw InvalidArgument("polarization amplitudes must be finite and not both zero");
    }
    return PolarizationState(amplitudes / norm);
}

PolarizationState PolarizationState::horizontal() {
    return PolarizationState(Eigen::Vector2cd(1.0, 0.0));
}

PolarizationState PolarizationState::vertical() {
    return PolarizationState(Eigen::Vector2cd(0.0, 1.0));
}

PolarizationState PolarizationState::linear(double angle) {
    const double r = deg_to_rad(angle);
    return PolarizationState(Eigen::Vector2cd(std::cos(r), std::sin(r)));
}

PolarizationState PrepRecipe::apply(const PolarizationState &input) const {
    const auto after_qwp = apply_plate(input, {PlateKind::Quarter, qwp_angle});
    return apply_plate(after_qwp, {PlateKind::Half, hwp_angle});
}

JonesMatrix waveplate_matrix(const WavePlate &plate) {
    const double retardance = plate.kind == PlateKind::Half ? std::numbers::pi : std::numbers::pi / 2.0;
    const double angle = deg_to_rad(std::fmod(plate.angle, 180.0));
    const Eigen::Matrix2cd r = rotation(angle).cast<Complex>();
    Eigen::Matrix2cd retarder = Eigen::Matrix2cd::Zero();
    retarder(0, 0) = 1.0;
    retarder(1, 1) = std::polar(1.0, -retardance);
    return r * retarder * r.transpose();
}

PolarizationState apply_plate(const PolarizationState &state, const WavePlate &plate) {
    return PolarizationState::from_vector(waveplate_matrix(plate) * state.vector());
}

PolarizationState prepare_elliptical(double epsilon, double theta, Sign sign) {
    require_epsilon(epsilon);
    const double x = std::cos(deg_to_rad(epsilon));
    const double y = std::sin(deg_to_rad(epsilon));
    const double c = std::cos(deg_to_rad(theta));
    const double s = std::sin(deg_to_rad(theta));
    const Complex h{x * c, y * s};
    const Complex v{x * s, -y * c};
    return PolarizationState::from_amplitudes(h, sign_value(sign) * v);
}

PrepRecipe recipe_discriminator(double epsilon, double theta, Sign sign) {
    require_epsilon(epsilon);
    if (!(theta >= 0.0 && theta <= 90.0)) {
        throw InvalidArgument("ellipse orientation must lie in [0, 90] degrees, got " + std::to_string(theta));
    }
    const double k = sign_value(sign);
    return {k * epsilon, k * (epsilon + theta) / 2.0};
}

PolarizationState prepare_equatorial(double phi, Sign sign) {
    const Complex v = std::polar(sign_value(sign), deg_to_rad(std::fmod(phi, 360.0)));
    return PolarizationState::from_amplitudes(1.0, v);
}

PrepRecipe recipe_multimeter(double phi, Sign sign) {
    const double k = sign_value(sign);
    return {k * (-phi / 2.0), k * (90.0 - phi) / 4.0};
}

PrepRecipe recipe_linear(double angle) {
    return {0.0, angle / 2.0};
}

Complex overlap(const PolarizationState &s1, const PolarizationState &s2) {
    return s1.vector().dot(s2.vector());
}

bool equal_up_to_phase(const PolarizationState &s1, const PolarizationState &s2, double tolerance) {
    return std::abs(overlap(s1, s2)) >= 1.0 - tolerance;
}

}  // namespace progmeas
