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
#include "qwork/thermo/thermo.hpp"
#include "test_util.hpp"

namespace qwork::thermo {
namespace {

const HamiltonianSpec kQubit = HamiltonianSpec::qubit(1.0);
const ThermalContext kUnit(1.0);

DensityMatrix coherent_qubit(double p, cplx c) { return DensityMatrix(ComplexMatrix{{1.0 - p, c}, {std::conj(c), p}}); }

TEST(Thermo, ContextAndHamiltonianValidation) {
    EXPECT_THROW(ThermalContext(-1.0), UsageError);
    EXPECT_THROW(ThermalContext(0.0), UsageError);
    EXPECT_THROW(HamiltonianSpec({}), UsageError);
    EXPECT_THROW(HamiltonianSpec({0.0, NAN}), UsageError);
    const HamiltonianSpec h({0.0, 1.0, 1.0 + 1e-14, 2.0});
    ASSERT_EQ(h.eigenspaces().size(), 3u);
    EXPECT_EQ(h.eigenspaces()[1].size(), 2u);
}

TEST(Thermo, GibbsClosedForm) {
    const double z = 1.0 + std::exp(-1.0);
    const auto w = gibbs_weights(kQubit, kUnit);
    EXPECT_NEAR(w[0], 1.0 / z, 1e-15);
    EXPECT_NEAR(w[1], std::exp(-1.0) / z, 1e-15);
    EXPECT_NEAR(gibbs_free_energy(kQubit, kUnit), -std::log(z), 1e-14);
    EXPECT_NEAR(free_energy(gibbs_state(kQubit, kUnit), kQubit, kUnit), -std::log(z), 1e-12);
    // Shifting every energy leaves the state alone.
    const auto shifted = gibbs_weights(HamiltonianSpec({1000.0, 1001.0}), kUnit);
    EXPECT_NEAR(shifted[1], w[1], 1e-15);
}

TEST(Thermo, AverageWorkClosedForms) {
    const double z = 1.0 + std::exp(-1.0);
    EXPECT_NEAR(average_work(DensityMatrix::basis(2, 1), kQubit, kUnit).value, 1.0 + std::log(z), 1e-12);
    EXPECT_NEAR(average_work(gibbs_state(kQubit, kUnit), kQubit, kUnit).value, 0.0, 1e-12);
    EXPECT_THROW(average_work(coherent_qubit(0.5, 0.3), kQubit, kUnit), PreconditionError);
    EXPECT_EQ(average_work(DensityMatrix::basis(2, 1), kQubit, kUnit).kind, WorkQuantity::Kind::average);
}

TEST(Thermo, DephaseKeepsDegenerateBlocks) {
    Rng rng(3);
    const auto rho = random_density_matrix(3, rng);
    const HamiltonianSpec h({0.0, 1.0, 1.0});
    const auto d = dephase(rho, h);
    EXPECT_EQ(d(0, 1), cplx(0.0));
    EXPECT_EQ(d(0, 2), cplx(0.0));
    EXPECT_EQ(d(1, 2), rho(1, 2));
    EXPECT_TRUE(is_incoherent(d, h));
    EXPECT_FALSE(is_incoherent(rho, h));
}

TEST(Thermo, WorkLockingGapProperties) {
    Rng rng(4);
    for (int trial = 0; trial < 200; ++trial) {
        const auto rho = random_density_matrix(2, rng);
        const double gap = work_locking_gap(rho, kQubit, kUnit);
        EXPECT_GE(gap, -1e-12);
        // Same energy, so the gap is pure entropy difference.
        const double entropy_gap = von_neumann_entropy(dephase(rho, kQubit)) - von_neumann_entropy(rho);
        EXPECT_NEAR(gap, entropy_gap, 1e-10);
        EXPECT_LE(accessible_work(rho, kQubit, kUnit).value,
                  free_energy(rho, kQubit, kUnit) - gibbs_free_energy(kQubit, kUnit) + 1e-12);
    }
    EXPECT_NEAR(work_locking_gap(DensityMatrix::diagonal(std::vector<double>{0.3, 0.7}), kQubit, kUnit), 0.0, 1e-15);
    // |+>: the full ln 2 of coherence is locked.
    EXPECT_NEAR(work_locking_gap(coherent_qubit(0.5, 0.5), kQubit, kUnit), std::log(2.0), 1e-9);
}

TEST(Thermo, SingleShotClosedForms) {
    const auto w = gibbs_weights(kQubit, kUnit);
    const auto excited = DensityMatrix::basis(2, 1);
    EXPECT_NEAR(single_shot_work(excited, kQubit, kUnit, 0.0).value, -std::log(w[1]), 1e-12);
    const auto mixed = DensityMatrix::diagonal(std::vector<double>{0.3, 0.7});
    EXPECT_NEAR(single_shot_work(mixed, kQubit, kUnit, 0.0).value, 0.0, 1e-12);
    EXPECT_NEAR(single_shot_work(mixed, kQubit, kUnit, 0.29).value, 0.0, 1e-12);
    EXPECT_NEAR(single_shot_work(mixed, kQubit, kUnit, 0.3).value, -std::log(w[1]), 1e-12);
    EXPECT_NEAR(single_shot_work(mixed, kQubit, kUnit, 0.7).value, -std::log(w[1]), 1e-12);
    EXPECT_NEAR(single_shot_failure(mixed, kQubit, kUnit, -std::log(w[1])), 0.3, 1e-12);
    EXPECT_NEAR(single_shot_failure(mixed, kQubit, kUnit, 0.0), 0.0, 1e-12);
    EXPECT_EQ(single_shot_failure(mixed, kQubit, kUnit, 50.0), 1.0);
    const auto q = single_shot_work(excited, kQubit, kUnit, 0.1);
    EXPECT_EQ(q.kind, WorkQuantity::Kind::single_shot);
    EXPECT_EQ(q.epsilon, 0.1);
    EXPECT_THROW(single_shot_work(excited, kQubit, kUnit, 1.0), UsageError);
    EXPECT_THROW(single_shot_work(coherent_qubit(0.5, 0.2), kQubit, kUnit, 0.0), PreconditionError);
}

TEST(Thermo, SingleShotIsMonotoneInEpsilon) {
    const HamiltonianSpec h({0.0, 0.4, 1.1, 2.0});
    const auto rho = DensityMatrix::diagonal(std::vector<double>{0.1, 0.2, 0.3, 0.4});
    double prev = -1.0;
    for (double eps = 0.0; eps < 0.99; eps += 0.05) {
        const double w = single_shot_work(rho, h, kUnit, eps).value;
        EXPECT_GE(w, prev - 1e-12);
        prev = w;
        // The inverse hits a failure probability no larger than eps.
        EXPECT_LE(single_shot_failure(rho, h, kUnit, w), eps + 1e-12);
    }
}

TEST(Thermo, LandauerCost) {
    EXPECT_NEAR(landauer_cost(DensityMatrix::maximally_mixed(2), DensityMatrix::basis(2, 0), ThermalContext(2.0)),
                2.0 * std::log(2.0), 1e-12);
    EXPECT_NEAR(landauer_cost(DensityMatrix::basis(2, 0), DensityMatrix::maximally_mixed(2), kUnit), -std::log(2.0),
                1e-12);
}

}  // namespace
}  // namespace qwork::thermo
