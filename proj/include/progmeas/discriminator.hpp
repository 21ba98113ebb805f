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

// Programmable unambiguous discrimination of the elliptical pair phi+-,
// with the program photon prepared in phi+.

#pragma once

#include <string>
#include <vector>

#include "progmeas/counts.hpp"
#include "progmeas/experiment.hpp"

namespace progmeas {

/// Bell-analysis success probability 2(|a|^2 - |a|^4),
/// |a|^2 = x^2 cos^2(theta) + y^2 sin^2(theta), x = cos eps, y = sin eps.
double success_prob_theory(double epsilon, double theta);

/// 1 - |<phi+|phi->|, the optimal unambiguous-discrimination probability.
double optimal_prob(double epsilon, double theta);

/// Shoulder-normalized success probability
///   1/2 [ C++ / (2 (C++_sh + C-+_sh)) + C-- / (2 (C--_sh + C+-_sh)) ].
/// Throws InvalidNormalization when a shoulder sum is zero.
Estimate estimate_success(const CountRecord &counts);

/// Wrong conclusive / all conclusive. Throws NoData when nothing was
/// conclusive.
Estimate error_rate(const CountRecord &counts);

/// The phi+ and phi- input settings of one (epsilon, theta) point.
InputSetting discriminator_setting(double epsilon, double theta, Sign data_sign);

struct DiscriminationPoint {
    double epsilon = 0.0;
    double theta = 0.0;
    double p_theory = 0.0;
    double p_optimal = 0.0;
    double p_estimated = 0.0;  // NaN when the estimator failed
    double p_std_error = 0.0;
    double error_rate = 0.0;  // NaN when the estimator failed
    double error_rate_std_error = 0.0;
    CountRecord counts;
    std::string error;  // empty on success
};

/// Sweeps epsilon x theta; estimator failures are recorded per point.
std::vector<DiscriminationPoint> run_discriminator_sweep(const DiscriminatorGrid &grid,
                                                         const ExperimentConfig &config);

}  // namespace progmeas
