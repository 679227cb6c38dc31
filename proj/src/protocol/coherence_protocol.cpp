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

#include "qwork/protocol/coherence_protocol.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "qwork/core/errors.hpp"

namespace qwork::protocol {
namespace {

constexpr double kImprovementMargin = 1e-12;

void require_probability(double p, const char* name) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw UsageError(std::string(name) + " must lie in [0, 1]");
    }
}

std::size_t joint_index(std::size_t n, std::size_t k, std::size_t levels) { return n * levels + k; }

}  // namespace

PureState CoherentInput::state() const { return make_input(p, phi); }

PureState make_input(double p, double phi) {
    require_probability(p, "p");
    return PureState({std::sqrt(1.0 - p), std::sqrt(p) * std::polar(1.0, -phi)});
}

GibbsTarget::GibbsTarget(double r_) : r(r_) {
    if (!(r > 0.0 && r < 1.0)) {
        throw UsageError("Gibbs target r must lie in (0, 1)");
    }
}

PureState GibbsTarget::state() const { return PureState({std::sqrt(1.0 - r), std::sqrt(r)}); }

UnitaryMatrix rotation_unitary(double p, double phi) {
    require_probability(p, "p");
    const double a = std::sqrt(p);
    const double b = std::sqrt(1.0 - p);
    const cplx ph = std::polar(1.0, phi);
    return UnitaryMatrix(ComplexMatrix{{a, -b * ph}, {b, a * ph}});
}

UnitaryMatrix excited_to_gibbs(const GibbsTarget& target) {
    const double a = std::sqrt(target.r);
    const double b = std::sqrt(1.0 - target.r);
    return UnitaryMatrix(ComplexMatrix{{a, b}, {-b, a}});
}

ComplexMatrix shift_operator(std::size_t levels) {
    ComplexMatrix d(levels, levels);
    for (std::size_t n = 0; n + 1 < levels; ++n) {
        d(n + 1, n) = 1.0;
    }
    return d;
}

double coherence_quality(const DensityMatrix& reference) {
    // Tr(rho Delta) = sum_n rho(n, n+1)
    double q = 0.0;
    for (std::size_t n = 0; n + 1 < reference.dim(); ++n) {
        q += reference(n, n + 1).real();
    }
    return q;
}

ReferenceState::ReferenceState(DensityMatrix rho) : rho_(std::move(rho)), quality_(coherence_quality(rho_)) {}

ReferenceState ReferenceState::uniform(std::size_t levels) {
    if (levels == 0) {
        throw UsageError("reference needs at least one level");
    }
    const double a = 1.0 / std::sqrt(static_cast<double>(levels));
    return ReferenceState(DensityMatrix(PureState::normalized(std::vector<cplx>(levels, a))));
}

ReferenceState ReferenceState::fock(std::size_t levels, std::size_t n) {
    return ReferenceState(DensityMatrix::basis(levels, n));
}

double ReferenceState::max_quality(std::size_t levels) {
    return static_cast<double>(levels - 1) / static_cast<double>(levels);
}

ReferenceState ReferenceState::with_quality(std::size_t levels, double quality) {
    if (levels < 2) {
        throw UsageError("reference needs at least two levels to carry coherence");
    }
    const double top = max_quality(levels);
    if (!(quality >= 0.0) || quality > top + 1e-12) {
        throw UsageError("requested reference quality " + std::to_string(quality) + " is outside [0, " +
                         std::to_string(top) + "] for L = " + std::to_string(levels));
    }
    const double lambda = std::min(1.0, quality / top);
    const double inv = 1.0 / static_cast<double>(levels);
    ComplexMatrix m(levels, levels);
    for (std::size_t i = 0; i < levels; ++i) {
        for (std::size_t j = 0; j < levels; ++j) {
            m(i, j) = lambda * inv + (i == j ? (1.0 - lambda) * inv : 0.0);
        }
    }
    return ReferenceState(DensityMatrix(std::move(m)));
}

UnitaryMatrix build_V(const UnitaryMatrix& u, std::size_t levels) {
    if (u.dim() != 2) {
        throw UsageError("build_V expects a qubit unitary");
    }
    if (levels < 2) {
        throw UsageError("build_V needs a reference with at least two levels");
    }
    const std::size_t d = 2 * levels;
    ComplexMatrix v(d, d);
    v(joint_index(0, 0, levels), joint_index(0, 0, levels)) = 1.0;
    for (std::size_t l = 1; l < levels; ++l) {
        for (std::size_t n = 0; n < 2; ++n) {
            for (std::size_t m = 0; m < 2; ++m) {
                v(joint_index(n, l - n, levels), joint_index(m, l - m, levels)) = u(n, m);
            }
        }
    }
    v(joint_index(1, levels - 1, levels), joint_index(1, levels - 1, levels)) = 1.0;
    return UnitaryMatrix(std::move(v));
}

ComplexMatrix total_excitation(std::size_t levels) {
    ComplexMatrix n(2 * levels, 2 * levels);
    for (std::size_t s = 0; s < 2; ++s) {
        for (std::size_t k = 0; k < levels; ++k) {
            n(joint_index(s, k, levels), joint_index(s, k, levels)) = static_cast<double>(s + k);
        }
    }
    return n;
}

PreprocessResult preprocess(const DensityMatrix& system, const ReferenceState& reference, const UnitaryMatrix& u) {
    if (system.dim() != 2) {
        throw UsageError("preprocess expects a qubit system");
    }
    const std::size_t levels = reference.levels();
    const UnitaryMatrix v = build_V(u, levels);
    const ComplexMatrix joint = kron(system.matrix(), reference.state().matrix());
    const DensityMatrix out = DensityMatrix::from_channel_output(conjugate(v.matrix(), joint));

    const std::array<std::size_t, 2> dims{2, levels};
    DensityMatrix rho_s = partial_trace(out, dims, 0);
    DensityMatrix rho_r = partial_trace(out, dims, 1);
    const double leakage = system(0, 0).real() * reference.state()(0, 0).real() +
                           system(1, 1).real() * reference.state()(levels - 1, levels - 1).real();
    return {std::move(rho_s), ReferenceState(std::move(rho_r)), leakage};
}

PreprocessResult preprocess(const PureState& system, const ReferenceState& reference, const UnitaryMatrix& u) {
    return preprocess(DensityMatrix(system), reference, u);
}

double quality_q(const DensityMatrix& rotated) {
    if (rotated.dim() != 2) {
        throw UsageError("quality_q expects a qubit state");
    }
    return std::clamp(rotated(1, 1).real(), 0.0, 1.0);
}

ExtractionOutcome extract_work(const DensityMatrix& rotated, const GibbsTarget& target,
                               const thermo::HamiltonianSpec& system, const thermo::ThermalContext& ctx) {
    if (rotated.dim() != 2 || system.dim() != 2) {
        throw UsageError("extract_work expects a qubit system");
    }
    const double r = target.r;
    const double f = std::clamp(expectation(rotated, DensityMatrix(target.state()).matrix()).real(), 0.0, 1.0);
    const double success = (1.0 - r) * f + r * (1.0 - f);
    const std::array<double, 2> ideal{1.0 - r, r};
    const double w = thermo::single_shot_work(DensityMatrix::diagonal(ideal), system, ctx, r).value;
    return {success, w, success * w};
}

ExtractionOutcome extract_excited_work(const DensityMatrix& rotated, const thermo::HamiltonianSpec& system,
                                       const thermo::ThermalContext& ctx) {
    if (rotated.dim() != 2 || system.dim() != 2) {
        throw UsageError("extract_excited_work expects a qubit system");
    }
    const double success = quality_q(rotated);
    const double w = thermo::single_shot_work(DensityMatrix::basis(2, 1), system, ctx, 0.0).value;
    return {success, w, success * w};
}

RepumpResult repump(const ReferenceState& reference) {
    const std::size_t levels = reference.levels();
    const DensityMatrix& rho = reference.state();
    ComplexMatrix out(levels, levels);
    for (std::size_t i = 0; i + 1 < levels; ++i) {
        for (std::size_t j = 0; j + 1 < levels; ++j) {
            out(i + 1, j + 1) = rho(i, j);
        }
    }
    out(levels - 1, levels - 1) += rho(levels - 1, levels - 1);
    const double tr = out.trace().real();
    out *= 1.0 / tr;
    return {ReferenceState(DensityMatrix::from_channel_output(std::move(out))), kRepumpCost};
}

ProtocolResult run_cycle(const CoherentInput& input, const ReferenceState& reference, const GibbsTarget& target,
                         const thermo::ThermalContext& ctx, const ProtocolOptions& options) {
    const UnitaryMatrix to_excited = rotation_unitary(input.p, input.phi);
    const bool gibbs = options.target == RotationTarget::coherent_gibbs;
    const UnitaryMatrix u = gibbs ? excited_to_gibbs(target) * to_excited : to_excited;
    PreprocessResult pre = preprocess(input.state(), reference, u);

    const PureState aim = gibbs ? target.state() : PureState::basis(2, 1);
    const double q = std::clamp(expectation(pre.system, DensityMatrix(aim).matrix()).real(), 0.0, 1.0);
    const ExtractionOutcome ext = gibbs ? extract_work(pre.system, target, options.system, ctx)
                                        : extract_excited_work(pre.system, options.system, ctx);

    double cost = 0.0;
    ReferenceState after = pre.reference;
    if (options.repump) {
        RepumpResult rp = repump(pre.reference);
        after = std::move(rp.reference);
        cost = rp.cost;
    }
    return {q,
            ext.success_prob,
            ext.expected_work,
            cost,
            ext.expected_work - cost,
            pre.boundary_leakage,
            std::move(pre.system),
            std::move(after)};
}

std::vector<ProtocolResult> run_cycles(const CoherentInput& input, const ReferenceState& reference,
                                       const GibbsTarget& target, const thermo::ThermalContext& ctx,
                                       std::size_t cycles, const ProtocolOptions& options) {
    std::vector<ProtocolResult> out;
    out.reserve(cycles);
    ReferenceState current = reference;
    for (std::size_t c = 0; c < cycles; ++c) {
        out.push_back(run_cycle(input, current, target, ctx, options));
        current = out.back().reference_after;
    }
    return out;
}

double DephasedComparison::counterpart_failure() const {
    return std::min(counterpart_failure_direct, counterpart_failure_machine);
}

bool DephasedComparison::improvement() const {
    return coherent_failure < counterpart_failure() - kImprovementMargin;
}

DephasedComparison compare_with_dephased(const DensityMatrix& input, const ReferenceState& reference,
                                         const UnitaryMatrix& u, const thermo::HamiltonianSpec& system,
                                         const thermo::ThermalContext& ctx, double work) {
    const DensityMatrix counterpart = thermo::dephase(input, system);
    PreprocessResult coherent = preprocess(input, reference, u);
    const PreprocessResult incoherent = preprocess(counterpart, reference, u);
    // Extraction is a thermal operation and only sees energy populations.
    const double f_coh = thermo::single_shot_failure(thermo::dephase(coherent.system, system), system, ctx, work);
    const double f_direct = thermo::single_shot_failure(counterpart, system, ctx, work);
    const double f_machine =
        thermo::single_shot_failure(thermo::dephase(incoherent.system, system), system, ctx, work);
    return {work, f_coh, f_direct, f_machine, coherent.boundary_leakage, std::move(coherent.system)};
}

LockedWork single_shot_work_comparison(const DensityMatrix& input, const ReferenceState& reference,
                                       const UnitaryMatrix& u, const thermo::HamiltonianSpec& system,
                                       const thermo::ThermalContext& ctx, double epsilon) {
    const DensityMatrix counterpart = thermo::dephase(input, system);
    const PreprocessResult coherent = preprocess(input, reference, u);
    const PreprocessResult incoherent = preprocess(counterpart, reference, u);
    const double w_protocol =
        thermo::single_shot_work(thermo::dephase(coherent.system, system), system, ctx, epsilon).value;
    const double w_direct = thermo::single_shot_work(counterpart, system, ctx, epsilon).value;
    const double w_machine =
        thermo::single_shot_work(thermo::dephase(incoherent.system, system), system, ctx, epsilon).value;
    return {w_protocol, std::max(w_direct, w_machine)};
}

}  // namespace qwork::protocol
