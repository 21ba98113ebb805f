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

// Data (x) program two-photon states and the Bell-basis algebra.
// Basis ordering is (HH, HV, VH, VV) with the data photon first; Bell
// ordering is (Phi+, Phi-, Psi+, Psi-) everywhere, file outputs included.

#pragma once

#include <Eigen/Dense>

#include <array>

#include "progmeas/polarization.hpp"

namespace progmeas {

enum class BellState { PhiPlus = 0, PhiMinus = 1, PsiPlus = 2, PsiMinus = 3 };

/// Normalized complex 4-vector over (HH, HV, VH, VV).
class TwoPhotonState {
   public:
    static TwoPhotonState from_vector(const Eigen::Vector4cd &amplitudes);

    const Eigen::Vector4cd &amplitudes() const {
        return amplitudes_;
    }
    /// Amplitude of |data = i, program = j>, 0 = H, 1 = V.
    Complex amplitude(int data_pol, int program_pol) const {
        return amplitudes_(2 * data_pol + program_pol);
    }

   private:
    explicit TwoPhotonState(Eigen::Vector4cd amplitudes) : amplitudes_(std::move(amplitudes)) {
    }
    Eigen::Vector4cd amplitudes_;
};

struct BellDecomposition {
    Complex phi_plus;
    Complex phi_minus;
    Complex psi_plus;
    Complex psi_minus;

    Complex operator[](BellState b) const;
    /// Sum of c_k |Bell_k>.
    Eigen::Vector4cd reconstruct() const;
};

struct BellProbabilities {
    double phi_plus;
    double phi_minus;
    double psi_plus;
    double psi_minus;

    double operator[](BellState b) const;
};

/// |Bell_k> in the (HH, HV, VH, VV) basis.
Eigen::Vector4cd bell_vector(BellState b);

TwoPhotonState tensor(const PolarizationState &data, const PolarizationState &program);

BellDecomposition bell_decompose(const TwoPhotonState &state);

BellProbabilities bell_probabilities(const TwoPhotonState &state);

}  // namespace progmeas
