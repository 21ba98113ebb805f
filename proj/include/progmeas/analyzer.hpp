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

// Linear-optics partial Bell analyzer: a non-polarizing beamsplitter whose
// horizontal block carries the 180 degree geometric phase between the two
// counter-propagating inputs, followed by a polarizing beamsplitter on each
// output port and four detectors.
//
// Mode conventions. Input modes are (a_H, a_V, b_H, b_V) where port a
// carries the data photon and port b the program photon. Output modes are
// (1H, 1V, 2H, 2V). Output port 1 receives input a transmitted and input b
// reflected.

#pragma once

#include <Eigen/Dense>

#include <array>
#include <cstddef>
#include <span>
#include <string>

#include "progmeas/twophoton.hpp"

namespace progmeas {

enum class Detector { D1 = 0, D2 = 1, D3 = 2, D4 = 3 };

enum class Outcome { PsiPlus, PsiMinus, Inconclusive };

std::string to_string(Detector d);
std::string to_string(Outcome o);

inline constexpr std::size_t kNumOutputModes = 4;
/// Unordered pairs (m <= n) of output modes.
inline constexpr std::size_t kNumModePairs = 10;

/// Output mode index for (port in {1, 2}, polarization 0 = H / 1 = V).
constexpr std::size_t output_mode(int port, int polarization) {
    return static_cast<std::size_t>(2 * (port - 1) + polarization);
}

/// Index into a ModePairDistribution for modes m and n (order irrelevant).
std::size_t mode_pair_index(std::size_t m, std::size_t n);
/// Inverse of mode_pair_index: (m, n) with m <= n.
std::array<std::size_t, 2> mode_pair(std::size_t pair_index);

/// Probability of each unordered pair of output modes receiving the two
/// photons. Same-mode entries mean both photons hit the same detector.
using ModePairDistribution = std::array<double, kNumModePairs>;

/// Output mode -> detector. Default: D1 = (1,H), D2 = (1,V), D3 = (2,V),
/// D4 = (2,H).
struct DetectorMap {
    std::array<Detector, kNumOutputModes> detector_of_mode{Detector::D1, Detector::D2, Detector::D4, Detector::D3};

    void validate() const;
    bool operator==(const DetectorMap &) const = default;
};

struct AnalyzerConfig {
    double transmittance_h = 0.5;
    double transmittance_v = 0.5;
    /// Indistinguishability M of the photons at the beamsplitter.
    double mode_overlap = 1.0;
    bool geometric_phase = true;
    DetectorMap detector_map{};

    void validate() const;
    static AnalyzerConfig ideal() {
        return {};
    }
};

/// Two photons registered by the detector bank (a multiset of size 2).
class CoincidencePattern {
   public:
    CoincidencePattern(Detector a, Detector b);
    /// Throws InvalidArgument unless exactly two hits are given.
    static CoincidencePattern from_hits(std::span<const Detector> hits);

    Detector first() const {
        return first_;
    }
    Detector second() const {
        return second_;
    }
    bool same_detector() const {
        return first_ == second_;
    }

   private:
    Detector first_;
    Detector second_;
};

/// {D1,D3}, {D2,D4} -> Psi+; {D1,D2}, {D3,D4} -> Psi-; everything else
/// (double hits on one detector, {D1,D4}, {D2,D3}) -> inconclusive.
Outcome classify(const CoincidencePattern &pattern);
Outcome classify(std::span<const Detector> hits);

struct OutcomeProbabilities {
    double psi_plus = 0.0;
    double psi_minus = 0.0;
    double inconclusive = 0.0;

    double operator[](Outcome o) const;
    double total() const {
        return psi_plus + psi_minus + inconclusive;
    }
};

/// 4x4 single-photon mode unitary, rows = output modes, columns = input
/// modes. Block diagonal in polarization. Rejects transmittances outside
/// the open interval (0, 1).
Eigen::Matrix4cd bs_transform(const AnalyzerConfig &config);

/// Bosonic two-photon propagation (fully indistinguishable photons).
ModePairDistribution quantum_pattern_probs(const TwoPhotonState &state, const AnalyzerConfig &config);

/// Each photon routed independently, no two-photon interference.
ModePairDistribution distinguishable_pattern_probs(const TwoPhotonState &state, const AnalyzerConfig &config);

/// M * quantum + (1 - M) * distinguishable with M = `mode_overlap`.
ModePairDistribution mixed_pattern_probs(const TwoPhotonState &state, const AnalyzerConfig &config,
                                         double mode_overlap);

OutcomeProbabilities classify_distribution(const ModePairDistribution &dist, const DetectorMap &map);

/// Outcome probabilities of the fully quantum branch, independent of
/// config.mode_overlap.
OutcomeProbabilities ideal_outcome_probs(const TwoPhotonState &state, const AnalyzerConfig &config);

OutcomeProbabilities distinguishable_outcome_probs(const TwoPhotonState &state, const AnalyzerConfig &config);

/// Mixture at config.mode_overlap.
OutcomeProbabilities outcome_probs(const TwoPhotonState &state, const AnalyzerConfig &config);

}  // namespace progmeas
