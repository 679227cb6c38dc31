// Copyright 2026 The qwork Authors
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

#include <cmath>
#include <numbers>

#include "qwork/core/errors.hpp"
#include "qwork/nogo/nogo.hpp"
#include "test_util.hpp"

namespace qwork::nogo {
namespace {

const double kS = 1.0 / std::numbers::sqrt2;

TEST(NoGo, DistinguishabilityPrecondition) {
    const WorkTaskSpec overlapping{{DensityMatrix::basis(2, 0), DensityMatrix(PureState::normalized({kS, kS}))},
                                   {1.0, 0.5}};
    const auto v = check_distinguishability_precondition(overlapping);
    ASSERT_EQ(v.size(), 1u);
    EXPECT_FALSE(v[0].permitted);
    EXPECT_NEAR(v[0].fidelity, kS, 1e-7);

    const WorkTaskSpec orthogonal{{DensityMatrix::basis(2, 0), DensityMatrix::basis(2, 1)}, {1.0, 0.5}};
    EXPECT_TRUE(check_distinguishability_precondition(orthogonal)[0].permitted);

    const WorkTaskSpec same_work{overlapping.states, {0.7, 0.7}};
    EXPECT_TRUE(check_distinguishability_precondition(same_work)[0].permitted);

    EXPECT_THROW(check_distinguishability_precondition({{DensityMatrix::basis(2, 0)}, {1.0, 2.0}}), UsageError);
}

TEST(NoGo, BestCommonRotationAttainsBound) {
    Rng rng(1);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = random_pure_state(2, rng);
        const auto b = random_pure_state(2, rng);
        const auto rot = best_common_rotation(a, b);
        const double bound = (1.0 + fidelity(a, b)) / 2.0;
        EXPECT_NEAR(rot.min_overlap_sq, bound, 1e-12);
        const auto ua = rot.u * a;
        const auto ub = rot.u * b;
        EXPECT_NEAR(std::norm(ua[1]), bound, 1e-12);
        EXPECT_NEAR(std::norm(ub[1]), bound, 1e-12);
        // No random unitary beats it.
        const auto h = haar_unitary(2, rng);
        EXPECT_LE(std::min(std::norm((h * a)[1]), std::norm((h * b)[1])), bound + 1e-12);
    }
}

TEST(NoGo, ExamplePairIsStuckAtOneOverRootTwo) {
    const auto zero = PureState::basis(2, 0);
    const auto plus = PureState::normalized({kS, kS});
    Rng rng(2);
    for (int trial = 0; trial < 20; ++trial) {
        const auto u = haar_unitary(2, rng);
        EXPECT_NEAR(fidelity(u * zero, u * plus), kS, 1e-14);
    }
    EXPECT_NEAR(best_common_rotation(zero, plus).min_overlap_sq, (1.0 + kS) / 2.0, 1e-14);
}

TEST(NoGo, AuditFindsNoUniversalRotation) {
    const auto audit = overlap_invariance_audit(200, 3);
    EXPECT_EQ(audit.trials, 200u);
    EXPECT_LT(audit.max_pure_deviation, 1e-12);
    EXPECT_LT(audit.max_mixed_deviation, 1e-9);
    EXPECT_EQ(audit.universal_rotations_found, 0u);
    EXPECT_LT(audit.best_tuned_partner_fidelity, 1.0 - 1e-6);
    const auto again = overlap_invariance_audit(200, 3);
    EXPECT_EQ(audit.max_mixed_deviation, again.max_mixed_deviation);
}

TEST(NoGo, ToleranceCurveIsQuadraticInAmplitude) {
    std::vector<double> deltas;
    for (int i = -5; i <= 5; ++i) deltas.push_back(0.01 * i);
    const auto ref = protocol::ReferenceState::uniform(100);
    const auto curve = epsilon_tolerance_curve(0.5, deltas, ref);
    EXPECT_NEAR(curve.q_ideal, 0.995, 1e-10);
    EXPECT_LT(curve.fit_residual, 1e-6);
    EXPECT_NEAR(curve.fitted_slope, curve.finite_difference_slope, 1e-6);
    EXPECT_GT(curve.fitted_slope, 0.9);
    for (const auto& pt : curve.points) {
        EXPECT_LE(1.0 - pt.q, curve.linear_bound_constant * std::abs(pt.delta) + (1.0 - curve.q_ideal) + 1e-12);
    }
    EXPECT_THROW(epsilon_tolerance_curve(0.5, {0.6}, ref), UsageError);
    EXPECT_THROW(epsilon_tolerance_curve(1.0, {0.0}, ref), UsageError);
}

TEST(NoGo, ToleranceSlopeTracksReferenceQuality) {
    // The perfect-reference limit: with a better ladder the mismatch costs
    // its full population, slope -> 1.
    const std::vector<double> deltas{-0.02, -0.01, 0.0, 0.01, 0.02};
    const double s_small = epsilon_tolerance_curve(0.4, deltas, protocol::ReferenceState::uniform(20)).fitted_slope;
    const double s_large = epsilon_tolerance_curve(0.4, deltas, protocol::ReferenceState::uniform(200)).fitted_slope;
    EXPECT_LT(s_small, s_large);
    EXPECT_LT(s_large, 1.0 + 1e-9);
}

TEST(NoGo, IdenticalWorkSchedule) {
    const WorkTaskSpec spec{{DensityMatrix::basis(2, 0), DensityMatrix::basis(2, 1), DensityMatrix::maximally_mixed(2)},
                            {0.8, 0.3, 0.5}};
    const auto s = identical_work_schedule(spec);
    EXPECT_EQ(s.w_common, 0.3);
    EXPECT_EQ(s.feasible, (std::vector<bool>{true, true, true}));
    EXPECT_THROW(identical_work_schedule({}), UsageError);
}

}  // namespace
}  // namespace qwork::nogo
