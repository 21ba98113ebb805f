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

// Jones-calculus single-photon polarization qubits and the wave-plate
// preparation recipes used by both measurement devices. Angles are in degrees
// throughout; conversion to radians happens only inside the trig calls.

#pragma once

#include <Eigen/Dense>

#include <complex>

namespace progmeas {

using Complex = std::complex<double>;
using JonesMatrix = Eigen::Matrix2cd;

enum class Sign { Plus, Minus };

inline double sign_value(Sign s) {
    return s == Sign::Plus ? 1.0 : -1.0;
}

double deg_to_rad(double degrees);

/// Normalized complex amplitude pair over {|H>, |V>}.
class PolarizationState {
   public:
    /// Normalizes (h, v). Throws InvalidArgument for the zero vector or
    /// non-finite input.
    static PolarizationState from_amplitudes(Complex h, Complex v);
    static PolarizationState from_vector(const Eigen::Vector2cd &amplitudes);
    static PolarizationState horizontal();
    static PolarizationState vertical();
    /// Linear polarization at `angle` degrees from horizontal.
    static PolarizationState linear(double angle);

    Complex h() const {
        return amplitudes_(0);
    }
    Complex v() const {
        return amplitudes_(1);
    }
    const Eigen::Vector2cd &vector() const {
        return amplitudes_;
    }

   private:
    explicit PolarizationState(Eigen::Vector2cd amplitudes) : amplitudes_(std::move(amplitudes)) {
    }
    Eigen::Vector2cd amplitudes_;
};

enum class PlateKind { Half, Quarter };

struct WavePlate {
    PlateKind kind;
    double angle;  // fast axis from horizontal, degrees; taken modulo 180
};

/// Quarter-wave plate first, then half-wave plate, both acting on |H>.
struct PrepRecipe {
    double qwp_angle;
    double hwp_angle;

    PolarizationState apply(const PolarizationState &input) const;
    PolarizationState prepare() const {
        return apply(PolarizationState::horizontal());
    }
};

/// Retarder R(t) diag(1, exp(-i d)) R(-t) with d = 180 deg (half) or 90 deg
/// (quarter). The sign of the retardance is the one under which the
/// preparation recipes below produce their analytic targets.
JonesMatrix waveplate_matrix(const WavePlate &plate);

PolarizationState apply_plate(const PolarizationState &state, const WavePlate &plate);

/// Elliptical data state
///   (x cos t + i y sin t)|H> +- (x sin t - i y cos t)|V>
/// with x = cos(epsilon), y = sin(epsilon). Requires 0 <= epsilon < 90.
PolarizationState prepare_elliptical(double epsilon, double theta, Sign sign);

/// QWP at +-epsilon, HWP at +-(epsilon + theta)/2.
PrepRecipe recipe_discriminator(double epsilon, double theta, Sign sign);

/// Equatorial basis state (|H> +- exp(i phi)|V>)/sqrt(2).
PolarizationState prepare_equatorial(double phi, Sign sign);

/// QWP at alpha = -phi/2, HWP at beta = (90 - phi)/4; the minus state uses
/// -alpha and -beta.
PrepRecipe recipe_multimeter(double phi, Sign sign);

/// Linear polarization at `angle` from |H> with the QWP parked at 0.
PrepRecipe recipe_linear(double angle);

/// <s1|s2>, conjugate-linear in s1.
Complex overlap(const PolarizationState &s1, const PolarizationState &s2);

/// |<s1|s2>| >= 1 - tolerance.
bool equal_up_to_phase(const PolarizationState &s1, const PolarizationState &s2, double tolerance = 1e-10);

}  // namespace progmeas
