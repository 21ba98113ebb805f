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

#include "progmeas/twophoton.hpp"

#include <cmath>
#include <numbers>

#include "progmeas/errors.hpp"

namespace progmeas {

TwoPhotonState TwoPhotonState::from_vector(const Eigen::Vector4cd &amplitudes) {
    const double norm = amplitudes.norm();
    if (!std::isfinite(norm) || norm == 0.0) {
        throw InvalidArgument("two-photon amplitudes must be finite and not all zero");
    }
    return TwoPhotonState(amplitudes / norm);
}

Eigen::Vector4cd bell_vector(BellState b) {
    const double k = 1.0 / std::numbers::sqrt2;
    switch (b) {
        case BellState::PhiPlus:
            return Eigen::Vector4cd(k, 0.0, 0.0, k);
        case BellState::PhiMinus:
            return Eigen::Vector4cd(k, 0.0, 0.0, -k);
        case BellState::PsiPlus:
            return Eigen::Vector4cd(0.0, k, k, 0.0);
        case BellState::PsiMinus:
            return Eigen::Vector4cd(0.0, k, -k, 0.0);
    }
    throw InvalidArgument("unknown Bell state");
}

Complex BellDecomposition::operator[](BellState b) const {
    switch (b) {
        case BellState::PhiPlus:
            return phi_plus;
        case BellState::PhiMinus:
            return phi_minus;
        case BellState::PsiPlus:
            return psi_plus;
        case BellState::PsiMinus:
            return psi_minus;
    }
    throw InvalidArgument("unknown Bell state");
}

Eigen::Vector4cd BellDecomposition::reconstruct() const {
    return phi_plus * bell_vector(BellState::PhiPlus) + phi_minus * bell_vector(BellState::PhiMinus) +
           psi_plus * bell_vector(BellState::PsiPlus) + psi_minus * bell_vector(BellState::PsiMinus);
}

double BellProbabilities::operator[](BellState b) const {
    switch (b) {
        case BellState::PhiPlus:
            return phi_plus;
        case BellState::PhiMinus:
            return phi_minus;
        case BellState::PsiPlus:
            return psi_plus;
        case BellState::PsiMinus:
            return psi_minus;
    }
    throw InvalidArgument("unknown Bell state");
}

TwoPhotonState tensor(const PolarizationState &data, const PolarizationState &program) {
    Eigen::Vector4cd amplitudes;
    amplitudes << data.h() * program.h(), data.h() * program.v(), data.v() * program.h(), data.v() * program.v();
    return TwoPhotonState::from_vector(amplitudes);
}

BellDecomposition bell_decompose(const TwoPhotonState &state) {
    const auto &a = state.amplitudes();
    return {
        bell_vector(BellState::PhiPlus).dot(a),
        bell_vector(BellState::PhiMinus).dot(a),
        bell_vector(BellState::PsiPlus).dot(a),
        bell_vector(BellState::PsiMinus).dot(a),
    };
}

BellProbabilities bell_probabilities(const TwoPhotonState &state) {
    const auto c = bell_decompose(state);
    return {std::norm(c.phi_plus), std::norm(c.phi_minus), std::norm(c.psi_plus), std::norm(c.psi_minus)};
}

}  // namespace progmeas
