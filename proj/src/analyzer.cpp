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

#include "progmeas/analyzer.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "progmeas/errors.hpp"

namespace progmeas {

namespace {

void require_unit_interval(double value, const char *name) {
    if (!(value >= 0.0 && value <= 1.0)) {
        throw InvalidArgument(std::string(name) + " must lie in [0, 1], got " + std::to_string(value));
    }
}

// Same as bs_transform without the open-interval check; the distinguishable
// branch is well defined at T = 0 and T = 1.
Eigen::Matrix4cd routing_matrix(const AnalyzerConfig &config) {
    Eigen::Matrix4cd u = Eigen::Matrix4cd::Zero();
    const std::array<double, 2> transmittance{config.transmittance_h, config.transmittance_v};
    for (int pol = 0; pol < 2; ++pol) {
        const double t = std::sqrt(transmittance[pol]);
        const double r = std::sqrt(1.0 - transmittance[pol]);
        // Horizontal components of the two counter-propagating inputs pick up
        // an extra 180 degree relative phase at the interface.
        const double b_sign = (config.geometric_phase && pol == 0) ? -1.0 : 1.0;
        const auto in_a = static_cast<Eigen::Index>(pol);
        const auto in_b = static_cast<Eigen::Index>(2 + pol);
        const auto out_1 = static_cast<Eigen::Index>(output_mode(1, pol));
        const auto out_2 = static_cast<Eigen::Index>(output_mode(2, pol));
        u(out_1, in_a) = t;
        u(out_2, in_a) = r;
        u(out_1, in_b) = b_sign * r;
        u(out_2, in_b) = -b_sign * t;
    }
    return u;
}

// O(m, n): amplitude for the data photon leaving in mode m and the program
// photon in mode n.
Eigen::Matrix4cd ordered_amplitudes(const TwoPhotonState &state, const Eigen::Matrix4cd &u) {
    Eigen::Matrix4cd o = Eigen::Matrix4cd::Zero();
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            const Complex psi = state.amplitude(i, j);
            if (psi == Complex{}) {
                continue;
            }
            o += psi * u.col(i) * u.col(2 + j).transpose();
        }
    }
    return o;
}

}  // namespace

std::string to_string(Detector d) {
    return "D" + std::to_string(static_cast<int>(d) + 1);
}

std::string to_string(Outcome o) {
    switch (o) {
        case Outcome::PsiPlus:
            return "Psi+";
        case Outcome::PsiMinus:
            return "Psi-";
        case Outcome::Inconclusive:
            return "?";
    }
    return "unknown";
}

std::size_t mode_pair_index(std::size_t m, std::size_t n) {
    if (m >= kNumOutputModes || n >= kNumOutputModes) {
        throw InvalidArgument("output mode index out of range");
    }
    if (m > n) {
        std::swap(m, n);
    }
    // Row-major upper triangle: (0,0) (0,1) (0,2) (0,3) (1,1) ... (3,3).
    return m * kNumOutputModes - m * (m - 1) / 2 + (n - m);
}

std::array<std::size_t, 2> mode_pair(std::size_t pair_index) {
    for (std::size_t m = 0; m < kNumOutputModes; ++m) {
        for (std::size_t n = m; n < kNumOutputModes; ++n) {
            if (mode_pair_index(m, n) == pair_index) {
                return {m, n};
            }
        }
    }
    throw InvalidArgument("mode pair index out of range");
}

void DetectorMap::validate() const {
    std::array<bool, 4> seen{};
    for (auto d : detector_of_mode) {
        const auto k = static_cast<std::size_t>(d);
        if (k >= seen.size() || seen[k]) {
            throw InvalidArgument("detector map must assign each of D1..D4 to exactly one output mode");
        }
        seen[k] = true;
    }
}

void AnalyzerConfig::validate() const {
    require_unit_interval(transmittance_h, "transmittance_h");
    require_unit_interval(transmittance_v, "transmittance_v");
    require_unit_interval(mode_overlap, "mode_overlap");
    detector_map.validate();
}

CoincidencePattern::CoincidencePattern(Detector a, Detector b)
    : first_(std::min(a, b)), second_(std::max(a, b)) {
}

CoincidencePattern CoincidencePattern::from_hits(std::span<const Detector> hits) {
    if (hits.size() != 2) {
        throw InvalidArgument("a coincidence pattern needs exactly 2 photons, got " + std::to_string(hits.size()));
    }
    return {hits[0], hits[1]};
}

Outcome classify(const CoincidencePattern &pattern) {
    if (pattern.same_detector()) {
        return Outcome::Inconclusive;
    }
    using enum Detector;
    const auto a = pattern.first();
    const auto b = pattern.second();
    if ((a == D1 && b == D3) || (a == D2 && b == D4)) {
        return Outcome::PsiPlus;
    }
    if ((a == D1 && b == D2) || (a == D3 && b == D4)) {
        return Outcome::PsiMinus;
    }
    return Outcome::Inconclusive;
}

Outcome classify(std::span<const Detector> hits) {
    return classify(CoincidencePattern::from_hits(hits));
}

double OutcomeProbabilities::operator[](Outcome o) const {
    switch (o) {
        case Outcome::PsiPlus:
            return psi_plus;
        case Outcome::PsiMinus:
            return psi_minus;
        case Outcome::Inconclusive:
            return inconclusive;
    }
    return 0.0;
}

Eigen::Matrix4cd bs_transform(const AnalyzerConfig &config) {
    for (double t : {config.transmittance_h, config.transmittance_v}) {
        if (!(t > 0.0 && t < 1.0)) {
            throw InvalidArgument("beamsplitter transmittance must lie in (0, 1), got " + std::to_string(t));
        }
    }
    return routing_matrix(config);
}

ModePairDistribution quantum_pattern_probs(const TwoPhotonState &state, const AnalyzerConfig &config) {
    const auto o = ordered_amplitudes(state, bs_transform(config));
    ModePairDistribution dist{};
    for (std::size_t m = 0; m < kNumOutputModes; ++m) {
        for (std::size_t n = m; n < kNumOutputModes; ++n) {
            const auto mi = static_cast<Eigen::Index>(m);
            const auto ni = static_cast<Eigen::Index>(n);
            // (c_m^dag)^2 |0> = sqrt(2) |2_m>
            dist[mode_pair_index(m, n)] = m == n ? 2.0 * std::norm(o(mi, mi)) : std::norm(o(mi, ni) + o(ni, mi));
        }
    }
    return dist;
}

ModePairDistribution distinguishable_pattern_probs(const TwoPhotonState &state, const AnalyzerConfig &config) {
    const auto o = ordered_amplitudes(state, routing_matrix(config));
    ModePairDistribution dist{};
    for (std::size_t m = 0; m < kNumOutputModes; ++m) {
        for (std::size_t n = 0; n < kNumOutputModes; ++n) {
            dist[mode_pair_index(m, n)] += std::norm(o(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n)));
        }
    }
    return dist;
}

ModePairDistribution mixed_pattern_probs(const TwoPhotonState &state, const AnalyzerConfig &config,
                                         double mode_overlap) {
    require_unit_interval(mode_overlap, "mode_overlap");
    ModePairDistribution dist{};
    if (mode_overlap > 0.0) {
        const auto q = quantum_pattern_probs(state, config);
        for (std::size_t k = 0; k < dist.size(); ++k) {
            dist[k] += mode_overlap * q[k];
        }
    }
    if (mode_overlap < 1.0) {
        const auto d = distinguishable_pattern_probs(state, config);
        for (std::size_t k = 0; k < dist.size(); ++k) {
            dist[k] += (1.0 - mode_overlap) * d[k];
        }
    }
    return dist;
}

OutcomeProbabilities classify_distribution(const ModePairDistribution &dist, const DetectorMap &map) {
    OutcomeProbabilities out;
    for (std::size_t k = 0; k < dist.size(); ++k) {
        const auto [m, n] = mode_pair(k);
        const auto outcome = classify(CoincidencePattern(map.detector_of_mode[m], map.detector_of_mode[n]));
        switch (outcome) {
            case Outcome::PsiPlus:
                out.psi_plus += dist[k];
                break;
            case Outcome::PsiMinus:
                out.psi_minus += dist[k];
                break;
            case Outcome::Inconclusive:
                out.inconclusive += dist[k];
                break;
        }
    }
    return out;
}

OutcomeProbabilities ideal_outcome_probs(const TwoPhotonState &state, const AnalyzerConfig &config) {
    return classify_distribution(quantum_pattern_probs(state, config), config.detector_map);
}

OutcomeProbabilities distinguishable_outcome_probs(const TwoPhotonState &state, const AnalyzerConfig &config) {
    return classify_distribution(distinguishable_pattern_probs(state, config), config.detector_map);
}

OutcomeProbabilities outcome_probs(const TwoPhotonState &state, const AnalyzerConfig &config) {
    return classify_distribution(mixed_pattern_probs(state, config, config.mode_overlap), config.detector_map);
}

}  // namespace progmeas
