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

// Phase-covariant multimeter with a single-qubit program: the POVM family
// Pi(eta), the inconclusive-rate / fidelity trade-off, the effective POVM
// on the data qubit, and reinterpretation of eta = 1 data as eta < 1 data.

#pragma once

#include <Eigen/Dense>

#include <span>
#include <string>
#include <vector>

#include "progmeas/analyzer.hpp"
#include "progmeas/counts.hpp"
#include "progmeas/experiment.hpp"
#include "progmeas/polarization.hpp"
#include "progmeas/random.hpp"

namespace progmeas {

/// Hermitian positive semidefinite operator on data (x) program.
struct PovmElement {
    Eigen::Matrix4cd matrix;
};

struct MultimeterPovm {
    PovmElement plus;
    PovmElement minus;
    PovmElement inconclusive;
};

struct DataQubitPovm {
    Eigen::Matrix2cd plus;
    Eigen::Matrix2cd minus;
    Eigen::Matrix2cd inconclusive;
};

bool is_hermitian(const Eigen::MatrixXcd &m, double tolerance = 1e-12);
/// Hermitian and smallest eigenvalue >= -tolerance.
bool is_positive_semidefinite(const Eigen::MatrixXcd &m, double tolerance = 1e-12);

/// Pi+- = |Psi+-><Psi+-| + (1 - eta)/2 (|Phi+><Phi+| + |Phi-><Phi-|),
/// Pi?  = eta (|Phi+><Phi+| + |Phi-><Phi-|). Rejects eta outside [0, 1].
MultimeterPovm povm_elements(double eta);

/// eta / 2.
double theory_PI(double eta);

/// (3 - 2 P_I) / (4 (1 - P_I)). Rejects P_I >= 1 and P_I < 0.
double fidelity_from_PI(double p_inconclusive);

/// Phase phi (degrees, in (-180, 180]) of an equatorial state
/// (|H> + e^{i phi}|V>)/sqrt(2). Throws InvalidArgument otherwise.
double equatorial_phase(const PolarizationState &state, double tolerance = 1e-9);

/// Contracts Pi(eta) with the program state on the program photon.
/// Only equatorial programs are accepted.
DataQubitPovm effective_povm(const PolarizationState &program, double eta);

/// pi+- = (1 - P_I)[F |psi+-><psi+-| + (1 - F)|psi-+><psi-+|], pi? = P_I 1,
/// with P_I = eta/2 and F = fidelity_from_PI(P_I).
DataQubitPovm effective_povm_closed_form(double phi, double eta);

/// Keeps each inconclusive outcome with probability eta, otherwise relabels
/// it Psi+ or Psi- with probability 1/2 each. Conclusive outcomes pass.
std::vector<Outcome> reinterpret(std::span<const Outcome> outcomes, double eta, RandomEngine &rng);

/// Count-level equivalent of reinterpret (same distribution).
SettingCounts reinterpret_counts(const SettingCounts &counts, double eta, RandomEngine &rng);

/// P_I = 1 - 1/2 [ (C++ + C-+) / (2 (C++_sh + C-+_sh))
///               + (C-- + C+-) / (2 (C--_sh + C+-_sh)) ].
Estimate estimate_PI(const CountRecord &counts);

/// Correct conclusive / all conclusive, averaged over the psi+ and psi-
/// inputs with weight 1/2. Throws NoData if either input had no conclusive
/// event.
Estimate estimate_fidelity(const CountRecord &counts);

InputSetting multimeter_setting(double phi, Sign data_sign);

struct MultimeterPoint {
    double phi = 0.0;
    double eta = 1.0;
    double p_inconclusive_theory = 0.0;
    double fidelity_theory = 0.0;
    double p_inconclusive = 0.0;  // NaN on failure
    double p_inconclusive_std_error = 0.0;
    double fidelity = 0.0;  // NaN on failure
    double fidelity_std_error = 0.0;
    double error_rate = 0.0;  // NaN on failure
    double error_rate_std_error = 0.0;
    CountRecord counts;  // after reinterpretation
    std::string error;
};

/// Simulates only the eta = 1 analyzer; eta < 1 comes from reinterpret.
/// Throws UnsupportedFeature for program_copies != 1.
std::vector<MultimeterPoint> run_multimeter_sweep(const MultimeterGrid &grid, const ExperimentConfig &config);

}  // namespace progmeas
