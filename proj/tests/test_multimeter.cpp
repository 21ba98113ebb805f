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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "oracle_values.hpp"
#include "progmeas/errors.hpp"
#include "progmeas/multimeter.hpp"
#include "test_support.hpp"

namespace progmeas {
namespace {

constexpr double kTight = 1e-12;

Eigen::Matrix2cd outer(const PolarizationState &s) {
    return s.vector() * s.vector().adjoint();
}

double born(const Eigen::Matrix4cd &m, const TwoPhotonState &s) {
    return (s.amplitudes().adjoint() * m * s.amplitudes())(0, 0).real();
}

TEST(Povm, EndpointsAndTraces) {
    const auto one = povm_elements(1.0);
    const Eigen::Matrix4cd psi_plus = bell_vector(BellState::PsiPlus) * bell_vector(BellState::PsiPlus).adjoint();
    const Eigen::Matrix4cd psi_minus = bell_vector(BellState::PsiMinus) * bell_vector(BellState::PsiMinus).adjoint();
    EXPECT_LT((one.plus.matrix - psi_plus).norm(), kTight);
    EXPECT_LT((one.minus.matrix - psi_minus).norm(), kTight);
    EXPECT_NEAR(one.inconclusive.matrix.trace().real(), 2.0, kTight);
    EXPECT_LT(povm_elements(0.0).inconclusive.matrix.norm(), kTight);
    const auto half = povm_elements(0.5);
    EXPECT_NEAR(half.inconclusive.matrix.trace().real(), 1.0, kTight);
    EXPECT_NEAR(half.plus.matrix.trace().real(), 1.5, kTight);
    EXPECT_NEAR(half.minus.matrix.trace().real(), 1.5, kTight);
}

TEST(Povm, ValidForManyEta) {
    for (int i = 0; i < 100; ++i) {
        const double eta = i / 99.0;
        const auto p = povm_elements(eta);
        EXPECT_LT((p.plus.matrix + p.minus.matrix + p.inconclusive.matrix - Eigen::Matrix4cd::Identity()).norm(),
                  kTight);
        for (const auto *e : {&p.plus, &p.minus, &p.inconclusive}) {
            EXPECT_TRUE(is_positive_semidefinite(e->matrix));
        }
    }
    EXPECT_THROW(povm_elements(-0.1), InvalidArgument);
    EXPECT_THROW(povm_elements(1.1), InvalidArgument);
}

TEST(Povm, PsdCheckRejects) {
    Eigen::Matrix2cd m;
    m << 1, 0, 0, -0.1;
    EXPECT_FALSE(is_positive_semidefinite(m));
    m << 1, 1, 0, 1;
    EXPECT_FALSE(is_hermitian(m));
}

TEST(TheoryPI, Values) {
    EXPECT_DOUBLE_EQ(theory_PI(1.0), 0.5);
    EXPECT_DOUBLE_EQ(theory_PI(0.0), 0.0);
    EXPECT_NEAR(theory_PI(0.6), 0.3, kTight);
}

TEST(TheoryPI, MatchesBornRuleAndIsPhaseCovariant) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> angle(-180.0, 180.0);
    for (double eta : {0.0, 0.3, 0.6, 1.0}) {
        const auto povm = povm_elements(eta);
        const double fid = fidelity_from_PI(theory_PI(eta));
        for (int i = 0; i < 10; ++i) {
            const double phi = angle(rng);
            const auto program = prepare_equatorial(phi, Sign::Plus);
            for (auto sign : {Sign::Plus, Sign::Minus}) {
                const auto in = tensor(prepare_equatorial(phi, sign), program);
                EXPECT_NEAR(born(povm.inconclusive.matrix, in), theory_PI(eta), kTight);
                const auto &right = sign == Sign::Plus ? povm.plus : povm.minus;
                const auto &wrong = sign == Sign::Plus ? povm.minus : povm.plus;
                EXPECT_NEAR(born(right.matrix, in), (1.0 - theory_PI(eta)) * fid, kTight);
                EXPECT_NEAR(born(wrong.matrix, in), (1.0 - theory_PI(eta)) * (1.0 - fid), kTight);
            }
        }
    }
}

TEST(Fidelity, Relation) {
    EXPECT_EQ(fidelity_from_PI(0.0), 0.75);
    EXPECT_EQ(fidelity_from_PI(0.5), 1.0);
    EXPECT_NEAR(fidelity_from_PI(0.25), oracle::kFidelityAtQuarter, kTight);
    EXPECT_THROW(fidelity_from_PI(1.0), InvalidArgument);
    EXPECT_THROW(fidelity_from_PI(-0.01), InvalidArgument);
}

TEST(EffectivePovm, Endpoints) {
    const auto program = prepare_equatorial(0.0, Sign::Plus);
    const auto plus = prepare_equatorial(0.0, Sign::Plus);
    const auto minus = prepare_equatorial(0.0, Sign::Minus);
    const auto one = effective_povm(program, 1.0);
    EXPECT_LT((one.plus - 0.5 * outer(plus)).norm(), kTight);
    EXPECT_LT((one.minus - 0.5 * outer(minus)).norm(), kTight);
    EXPECT_LT((one.inconclusive - 0.5 * Eigen::Matrix2cd::Identity()).norm(), kTight);
    const auto zero = effective_povm(program, 0.0);
    EXPECT_LT((zero.plus - 0.75 * outer(plus) - 0.25 * outer(minus)).norm(), kTight);
    EXPECT_LT(zero.inconclusive.norm(), kTight);
}

TEST(EffectivePovm, MatchesClosedForm) {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> angle(-180.0, 180.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<std::pair<double, double>> cases{{32.0, 0.6}};
    for (int i = 0; i < 50; ++i) {
        cases.emplace_back(angle(rng), unit(rng));
    }
    for (auto [phi, eta] : cases) {
        const auto e = effective_povm(prepare_equatorial(phi, Sign::Plus), eta);
        const auto c = effective_povm_closed_form(phi, eta);
        EXPECT_LT((e.plus - c.plus).norm(), kTight);
        EXPECT_LT((e.minus - c.minus).norm(), kTight);
        EXPECT_LT((e.inconclusive - c.inconclusive).norm(), kTight);
        EXPECT_LT((e.plus + e.minus + e.inconclusive - Eigen::Matrix2cd::Identity()).norm(), kTight);
        EXPECT_TRUE(is_positive_semidefinite(e.plus));
        EXPECT_TRUE(is_positive_semidefinite(e.minus));
        EXPECT_TRUE(is_positive_semidefinite(e.inconclusive));
    }
}

TEST(EffectivePovm, RejectsNonEquatorialProgram) {
    EXPECT_THROW(effective_povm(PolarizationState::horizontal(), 0.5), InvalidArgument);
    EXPECT_NEAR(equatorial_phase(prepare_equatorial(-70.0, Sign::Plus)), -70.0, 1e-9);
}

TEST(Reinterpret, Endpoints) {
    RandomEngine rng(9);
    std::vector<Outcome> stream;
    for (int i = 0; i < 3000; ++i) {
        stream.push_back(Outcome(i % 3));
    }
    EXPECT_EQ(reinterpret(stream, 1.0, rng), stream);
    const auto none = reinterpret(stream, 0.0, rng);
    for (std::size_t i = 0; i < stream.size(); ++i) {
        EXPECT_NE(none[i], Outcome::Inconclusive);
        if (stream[i] != Outcome::Inconclusive) {
            EXPECT_EQ(none[i], stream[i]);
        }
    }
}

TEST(Reinterpret, RetainedFraction) {
    RandomEngine rng(10);
    const std::vector<Outcome> stream(100000, Outcome::Inconclusive);
    const auto out = reinterpret(stream, 0.5, rng);
    const double kept = static_cast<double>(std::count(out.begin(), out.end(), Outcome::Inconclusive));
    EXPECT_NEAR(kept / 1e5, 0.5, 3.0 * std::sqrt(0.25 / 1e5));
}

TEST(Reinterpret, CountLevelMatchesStream) {
    RandomEngine rng(12);
    const SettingCounts c{.pairs = 0, .psi_plus = 1000, .psi_minus = 10, .inconclusive = 100000};
    const auto r = reinterpret_counts(c, 0.3, rng);
    EXPECT_EQ(r.psi_plus + r.psi_minus + r.inconclusive, c.psi_plus + c.psi_minus + c.inconclusive);
    EXPECT_NEAR(r.inconclusive / 1e5, 0.3, 4.0 * std::sqrt(0.21 / 1e5));
    EXPECT_NEAR(static_cast<double>(r.psi_plus - 1000) / (r.psi_minus - 10), 1.0, 0.05);
    EXPECT_EQ(reinterpret_counts(c, 1.0, rng), c);
}

TEST(EstimatePI, Arithmetic) {
    EXPECT_NEAR(estimate_PI({250, 0, 0, 250, 125, 125, 125, 125}).value, 0.5, kTight);
    EXPECT_NEAR(estimate_PI({0, 0, 0, 0, 125, 125, 125, 125}).value, 1.0, kTight);
    EXPECT_THROW(estimate_PI({1, 1, 1, 1, 0, 0, 0, 0}), InvalidNormalization);
}

TEST(EstimateFidelity, Arithmetic) {
    const auto f = estimate_fidelity({90, 20, 10, 80, 0, 0, 0, 0});
    EXPECT_NEAR(f.value, 0.5 * (0.9 + 0.8), kTight);
    EXPECT_GT(f.std_error, 0.0);
    EXPECT_THROW(estimate_fidelity({0, 5, 0, 5, 1, 1, 1, 1}), NoData);
}

TEST(Sweep, IdealFlatInconclusiveRate) {
    auto config = ExperimentConfig::ideal();
    config.set_pairs_per_setting(1e5);
    MultimeterGrid grid{{-90.0, -26.0, 0.0, 38.0, 90.0}};
    for (const auto &p : run_multimeter_sweep(grid, config)) {
        EXPECT_TRUE(p.error.empty()) << p.error;
        EXPECT_NEAR(p.p_inconclusive, 0.5, 3.0 * p.p_inconclusive_std_error) << p.phi;
        EXPECT_EQ(p.error_rate, 0.0);
        EXPECT_EQ(p.fidelity, 1.0);
        EXPECT_DOUBLE_EQ(p.p_inconclusive_theory, 0.5);
    }
}

TEST(Sweep, NoInconclusiveAtEtaZero) {
    auto config = ExperimentConfig::ideal();
    config.set_pairs_per_setting(1e5);
    for (const auto &p : run_multimeter_sweep({{-50.0, 14.0}, 0.0}, config)) {
        EXPECT_NEAR(p.fidelity, 0.75, 4.0 * p.fidelity_std_error);
        EXPECT_NEAR(p.p_inconclusive, 0.0, 4.0 * p.p_inconclusive_std_error + 1e-12);
        EXPECT_DOUBLE_EQ(p.fidelity_theory, 0.75);
    }
}

TEST(Sweep, DegradedOverlapGivesFewPercentErrors) {
    auto config = ExperimentConfig{};
    config.set_pairs_per_setting(1e6);
    for (const auto &p : run_multimeter_sweep({{0.0, 40.0}}, config)) {
        EXPECT_GT(p.error_rate, 0.0);
        EXPECT_LT(p.error_rate, 0.1);
    }
}

TEST(Sweep, OnlySingleProgramCopy) {
    EXPECT_THROW(run_multimeter_sweep({{0.0}, 1.0, 2}, ExperimentConfig::ideal()), UnsupportedFeature);
}

}  // namespace
}  // namespace progmeas
