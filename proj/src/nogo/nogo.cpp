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

#include "qwork/nogo/nogo.hpp"

#include <algorithm>
#include <cmath>

#include "qwork/core/errors.hpp"
#include "qwork/core/random.hpp"

namespace qwork::nogo {
namespace {

constexpr double kUniversalTol = 1e-6;

// Unitary whose second row is <v|, so that U v = |1>.
UnitaryMatrix rotation_onto_excited(std::span<const cplx> v) {
    const cplx a = v[0];
    const cplx b = v[1];
    // v_perp = (-conj(b), conj(a)); first row <v_perp| = (-b, a).
    return UnitaryMatrix(ComplexMatrix{{-b, a}, {std::conj(a), std::conj(b)}});
}

double excited_overlap_sq(const UnitaryMatrix& u, const PureState& psi) {
    const auto out = u.matrix() * psi.amplitudes();
    return std::norm(out[1]);
}

}  // namespace

void WorkTaskSpec::validate() const {
    if (states.size() != works.size()) {
        throw UsageError("work task: states and works differ in length");
    }
    for (double w : works) {
        if (!std::isfinite(w)) {
            throw UsageError("work task: works must be finite");
        }
    }
    for (const auto& s : states) {
        if (s.dim() != 2) {
            throw UsageError("work task: states must be qubits");
        }
    }
}

std::vector<PairVerdict> check_distinguishability_precondition(const WorkTaskSpec& spec) {
    spec.validate();
    std::vector<PairVerdict> out;
    for (std::size_t i = 0; i < spec.states.size(); ++i) {
        for (std::size_t j = i + 1; j < spec.states.size(); ++j) {
            const double f = fidelity(spec.states[i], spec.states[j]);
            const bool equal = spec.works[i] == spec.works[j];
            out.push_back({i, j, f, equal, equal || f <= kOrthogonalityTol});
        }
    }
    return out;
}

CommonRotation best_common_rotation(const PureState& psi1, const PureState& psi2) {
    if (psi1.dim() != 2 || psi2.dim() != 2) {
        throw UsageError("best_common_rotation expects qubit states");
    }
    const cplx overlap = inner(psi1.amplitudes(), psi2.amplitudes());
    const cplx phase = std::abs(overlap) > 0.0 ? std::conj(overlap) / std::abs(overlap) : cplx{1.0};
    std::vector<cplx> bisector(2);
    for (std::size_t i = 0; i < 2; ++i) {
        bisector[i] = psi1[i] + phase * psi2[i];
    }
    const PureState b = PureState::normalized(std::move(bisector));
    UnitaryMatrix u = rotation_onto_excited(b.amplitudes());
    const double m = std::min(excited_overlap_sq(u, psi1), excited_overlap_sq(u, psi2));
    return {std::move(u), m};
}

InvarianceAudit overlap_invariance_audit(std::size_t trials, std::uint64_t seed) {
    InvarianceAudit audit;
    audit.trials = trials;
    audit.seed = seed;
    Rng rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        const UnitaryMatrix u = haar_unitary(2, rng);
        const PureState a = random_pure_state(2, rng);
        const PureState b = random_pure_state(2, rng);
        const double before = fidelity(a, b);
        const double after = fidelity(u * a, u * b);
        audit.max_pure_deviation = std::max(audit.max_pure_deviation, std::abs(after - before));

        const DensityMatrix r = random_density_matrix(2, rng);
        const DensityMatrix s = random_density_matrix(2, rng);
        const double f0 = fidelity(r, s);
        const double f1 = fidelity(apply_unitary(u, r), apply_unitary(u, s));
        audit.max_mixed_deviation = std::max(audit.max_mixed_deviation, std::abs(f1 - f0));

        if (before >= 1.0 - kUniversalTol) {
            continue;
        }
        const UnitaryMatrix tuned = rotation_onto_excited(a.amplitudes());
        for (const UnitaryMatrix* cand : {&u, &tuned}) {
            const double fa = std::sqrt(excited_overlap_sq(*cand, a));
            const double fb = std::sqrt(excited_overlap_sq(*cand, b));
            if (fa >= 1.0 - kUniversalTol && fb >= 1.0 - kUniversalTol) {
                ++audit.universal_rotations_found;
            }
        }
        ++audit.tuned_pairs;
        audit.best_tuned_partner_fidelity =
            std::max(audit.best_tuned_partner_fidelity, std::sqrt(excited_overlap_sq(tuned, b)));
    }
    return audit;
}

ToleranceCurve epsilon_tolerance_curve(double p_center, const std::vector<double>& deltas,
                                       const protocol::ReferenceState& reference, double fd_step) {
    if (!(p_center > 0.0 && p_center < 1.0)) {
        throw UsageError("p_center must lie in (0, 1)");
    }
    if (!(fd_step > 0.0)) {
        throw UsageError("finite-difference step must be positive");
    }
    const UnitaryMatrix u = protocol::rotation_unitary(p_center, 0.0);
    auto point_at = [&](double delta) {
        const double p = p_center + delta;
        if (!(p >= 0.0 && p <= 1.0)) {
            throw UsageError("p_center + delta = " + std::to_string(p) + " leaves [0, 1]");
        }
        const PureState psi = protocol::make_input(p, 0.0);
        const double amp = std::abs((u.matrix() * psi.amplitudes())[0]);
        const double q = protocol::quality_q(protocol::preprocess(psi, reference, u).system);
        return TolerancePoint{delta, p, amp, amp * amp, q};
    };

    ToleranceCurve curve{};
    curve.p_center = p_center;
    curve.fd_step = fd_step;
    curve.q_ideal = point_at(0.0).q;
    // Normal equations for y = c_a x_a + c_d x_d, x_a = mismatch^2, x_d = delta.
    double saa = 0.0, sad = 0.0, sdd = 0.0, say = 0.0, sdy = 0.0;
    for (double d : deltas) {
        curve.points.push_back(point_at(d));
        const auto& pt = curve.points.back();
        const double y = curve.q_ideal - pt.q;
        saa += pt.population_mismatch * pt.population_mismatch;
        sad += pt.population_mismatch * d;
        sdd += d * d;
        say += pt.population_mismatch * y;
        sdy += d * y;
        if (d != 0.0) {
            curve.linear_bound_constant = std::max(curve.linear_bound_constant, std::max(0.0, y) / std::abs(d));
        }
    }
    const double det = saa * sdd - sad * sad;
    if (std::abs(det) > 1e-300 && std::abs(det) > 1e-12 * saa * sdd) {
        curve.fitted_slope = (say * sdd - sdy * sad) / det;
        curve.population_drift = (saa * sdy - sad * say) / det;
    } else if (saa > 0.0) {
        curve.fitted_slope = say / saa;
    }
    double res = 0.0, sig = 0.0;
    for (const auto& pt : curve.points) {
        const double y = curve.q_ideal - pt.q;
        res += std::pow(y - curve.fitted_slope * pt.population_mismatch - curve.population_drift * pt.delta, 2);
        sig += y * y;
    }
    curve.fit_residual = sig > 0.0 ? std::sqrt(res / sig) : 0.0;

    const TolerancePoint up = point_at(fd_step);
    const TolerancePoint down = point_at(-fd_step);
    curve.finite_difference_slope =
        (2.0 * curve.q_ideal - up.q - down.q) / (up.population_mismatch + down.population_mismatch);
    return curve;
}

WorkSchedule identical_work_schedule(const WorkTaskSpec& spec) {
    spec.validate();
    if (spec.works.empty()) {
        throw UsageError("identical work schedule needs at least one state");
    }
    WorkSchedule out{*std::min_element(spec.works.begin(), spec.works.end()), {}};
    for (double w : spec.works) {
        out.feasible.push_back(w >= out.w_common);
    }
    return out;
}

}  // namespace qwork::nogo
