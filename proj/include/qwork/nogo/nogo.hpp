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

#pragma once

// Numerical checks behind the impossibility of a universal work extractor:
// no unitary can pull two distinct states onto the same target, because
// overlaps and fidelities survive any unitary.

#include <cstdint>
#include <vector>

#include "qwork/core/states.hpp"
#include "qwork/protocol/coherence_protocol.hpp"

namespace qwork::nogo {

/// States paired with the work each is meant to yield.
struct WorkTaskSpec {
    std::vector<DensityMatrix> states;
    std::vector<double> works;

    void validate() const;
};

struct PairVerdict {
    std::size_t first;
    std::size_t second;
    double fidelity;
    bool equal_work;
    bool permitted;
};

inline constexpr double kOrthogonalityTol = 1e-10;

/// Pairs asking for different work are permitted only when their states are
/// orthogonal (fidelity <= 1e-10); pairs asking for equal work always are.
std::vector<PairVerdict> check_distinguishability_precondition(const WorkTaskSpec& spec);

struct CommonRotation {
    UnitaryMatrix u;
    double min_overlap_sq;  // min_i |<1|U psi_i>|^2
};

/// Unitary sending the bisector of the two (rephased) states to |1>; it
/// attains the optimum (1 + |<psi1|psi2>|) / 2 of min_i |<1|U psi_i>|^2.
CommonRotation best_common_rotation(const PureState& psi1, const PureState& psi2);

struct InvarianceAudit {
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    double max_pure_deviation = 0.0;   // max ||<U a|U b>| - |<a|b>||
    double max_mixed_deviation = 0.0;  // max |F(U r U^+, U s U^+) - F(r, s)|
    std::size_t tuned_pairs = 0;       // pairs tested against a U tuned to one of them
    std::size_t universal_rotations_found = 0;
    double best_tuned_partner_fidelity = 0.0;  // closest a tuned U got the second state to |1>
};

/// Randomized check that unitaries preserve overlaps and fidelities, and that
/// no unitary maps two states with overlap < 1 - 1e-6 both within fidelity
/// 1 - 1e-6 of |1>. Each trial also tries the U that sends the first state
/// exactly to |1>.
InvarianceAudit overlap_invariance_audit(std::size_t trials, std::uint64_t seed);

struct TolerancePoint {
    double delta;
    double p;
    double amplitude_mismatch;   // |<0|U psi(p_center + delta)>|
    double population_mismatch;  // amplitude_mismatch^2
    double q;
};

struct ToleranceCurve {
    double p_center;
    double q_ideal;  // q at delta = 0, limited only by the reference
    std::vector<TolerancePoint> points;
    /// Least-squares fit q_ideal - q = fitted_slope * mismatch^2 +
    /// population_drift * delta. The drift term comes from the reference's
    /// boundary losses, which hit |0> and |1> populations differently; it is
    /// there even when the rotation matches the input exactly.
    double fitted_slope;
    double population_drift;
    /// Relative RMS residual of that fit.
    double fit_residual;
    /// Symmetric second difference at delta = +-fd_step divided by the
    /// mismatch; the drift term cancels.
    double finite_difference_slope;
    double fd_step;
    /// Smallest C with 1 - q <= C |delta| + (1 - q_ideal) over the grid.
    double linear_bound_constant;
};

/// q for inputs psi(p_center + delta) preprocessed with the rotation tuned to
/// p_center. Throws UsageError when p_center + delta leaves [0, 1].
ToleranceCurve epsilon_tolerance_curve(double p_center, const std::vector<double>& deltas,
                                       const protocol::ReferenceState& reference, double fd_step = 0.01);

struct WorkSchedule {
    double w_common;
    std::vector<bool> feasible;
};

/// w_common = min_i w_i; a state is flagged when its own work reaches it. This
/// says nothing about whether one machine can actually deliver w_common for
/// every input.
WorkSchedule identical_work_schedule(const WorkTaskSpec& spec);

}  // namespace qwork::nogo
