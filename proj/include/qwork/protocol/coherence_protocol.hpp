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

// Work extraction from coherence with a ladder reference: the input qubit is
// rotated by an energy-conserving unitary V(U) acting jointly on system and
// reference, work is drawn from the rotated state, and the reference is pushed
// one rung back up before the next cycle.

#include <cstddef>
#include <vector>

#include "qwork/core/states.hpp"
#include "qwork/thermo/thermo.hpp"

namespace qwork::protocol {

/// sqrt(1-p)|0> + sqrt(p) e^{-i phi}|1>
struct CoherentInput {
    double p = 0.5;
    double phi = 0.0;

    PureState state() const;
};

PureState make_input(double p, double phi);

/// Coherent Gibbs state sqrt(1-r)|0> + sqrt(r)|1>, r in (0, 1).
struct GibbsTarget {
    double r;

    explicit GibbsTarget(double r);
    PureState state() const;
};

/// 2x2 unitary with U make_input(p, phi) = |1>. For phi = 0 this is the real
/// rotation [[sqrt p, -sqrt(1-p)], [sqrt(1-p), sqrt p]]; otherwise that
/// rotation times diag(1, e^{i phi}).
UnitaryMatrix rotation_unitary(double p, double phi);

/// Real rotation taking |1> to the coherent Gibbs state of `target`.
UnitaryMatrix excited_to_gibbs(const GibbsTarget& target);

/// Truncated ladder shift sum_{n<L-1} |n+1><n|.
ComplexMatrix shift_operator(std::size_t levels);

/// <Delta-bar> = Re Tr(rho Delta) = (1/2) Tr(rho (Delta + Delta^dagger)).
double coherence_quality(const DensityMatrix& reference);

/// Ladder reference state with its cached coherence quality.
class ReferenceState {
   public:
    explicit ReferenceState(DensityMatrix rho);

    /// Uniform pure superposition over all L levels; quality (L-1)/L.
    static ReferenceState uniform(std::size_t levels);
    /// Energy eigenstate |n>; quality 0.
    static ReferenceState fock(std::size_t levels, std::size_t n);
    /// Mixture lambda |eta><eta| + (1-lambda) I/L of the uniform superposition
    /// and its dephased version, with lambda solved so the quality equals
    /// `quality`. Throws UsageError above (L-1)/L or below 0.
    static ReferenceState with_quality(std::size_t levels, double quality);

    static double max_quality(std::size_t levels);

    std::size_t levels() const { return rho_.dim(); }
    const DensityMatrix& state() const { return rho_; }
    double quality() const { return quality_; }

   private:
    DensityMatrix rho_;
    double quality_;
};

/// Energy-conserving lift of a qubit unitary onto system (x) reference:
///   V = |0><0| (x) |0><0| + sum_l sum_{n,m} <n|U|m> |n><m| (x) |l-n><l-m|,
/// l running over the complete shells 1..L-1. The single state |1>|L-1> of the
/// truncated top shell is mapped to itself.
UnitaryMatrix build_V(const UnitaryMatrix& u, std::size_t levels);

/// Total excitation number |1><1| (x) I + I (x) diag(0..L-1).
ComplexMatrix total_excitation(std::size_t levels);

struct PreprocessResult {
    DensityMatrix system;
    ReferenceState reference;
    /// Input weight on the two boundary states |0>|0> and |1>|L-1>, where V acts
    /// as the identity instead of as U.
    double boundary_leakage;
};

PreprocessResult preprocess(const DensityMatrix& system, const ReferenceState& reference, const UnitaryMatrix& u);
PreprocessResult preprocess(const PureState& system, const ReferenceState& reference, const UnitaryMatrix& u);

/// <1|rho|1>: 1 for an ideal rotation onto the excited state.
double quality_q(const DensityMatrix& rotated);

struct ExtractionOutcome {
    double success_prob;
    double work_on_success;
    double expected_work;
};

/// Protocol-level model of the extraction step on the rotated system. With
/// f = <gamma|rho|gamma>, success = (1-r) f + r (1-f); the work drawn on
/// success is the single-shot work of the ideal branch, i.e. of
/// diag(1-r, r) at failure probability r.
ExtractionOutcome extract_work(const DensityMatrix& rotated, const GibbsTarget& target,
                               const thermo::HamiltonianSpec& system, const thermo::ThermalContext& ctx);

/// Single-shot extraction of -kT ln gamma_11 by projecting onto |1>; succeeds
/// with probability <1|rho|1>.
ExtractionOutcome extract_excited_work(const DensityMatrix& rotated, const thermo::HamiltonianSpec& system,
                                       const thermo::ThermalContext& ctx);

struct RepumpResult {
    ReferenceState reference;
    double cost;
};

inline constexpr double kRepumpCost = 1.0;

/// rho -> Delta rho Delta^dagger + <L-1|rho|L-1> |L-1><L-1|, renormalized.
RepumpResult repump(const ReferenceState& reference);

enum class RotationTarget { excited, coherent_gibbs };

struct ProtocolOptions {
    RotationTarget target = RotationTarget::coherent_gibbs;
    bool repump = true;
    thermo::HamiltonianSpec system = thermo::HamiltonianSpec::qubit(1.0);
};

struct ProtocolResult {
    double q;  // fidelity of the rotated system with the rotation target
    double success_prob;
    double work_extracted;  // expected value
    double repump_cost;
    double net_work;
    double boundary_leakage;
    DensityMatrix system_after;
    ReferenceState reference_after;
};

ProtocolResult run_cycle(const CoherentInput& input, const ReferenceState& reference, const GibbsTarget& target,
                         const thermo::ThermalContext& ctx, const ProtocolOptions& options = {});

/// Feeds fresh copies of `input` through the protocol, carrying the reference
/// from one cycle to the next.
std::vector<ProtocolResult> run_cycles(const CoherentInput& input, const ReferenceState& reference,
                                       const GibbsTarget& target, const thermo::ThermalContext& ctx,
                                       std::size_t cycles, const ProtocolOptions& options = {});

/// Coherent input against its dephased counterpart at equal extracted work.
/// The counterpart may either extract directly or go through the same machine
/// (same reference, same V(U)); it takes whichever fails less often.
struct DephasedComparison {
    double work;
    double coherent_failure;
    double counterpart_failure_direct;
    double counterpart_failure_machine;
    double boundary_leakage;
    DensityMatrix coherent_output;

    double counterpart_failure() const;
    /// Strictly lower failure than the counterpart, beyond 1e-12.
    bool improvement() const;
};

DephasedComparison compare_with_dephased(const DensityMatrix& input, const ReferenceState& reference,
                                         const UnitaryMatrix& u, const thermo::HamiltonianSpec& system,
                                         const thermo::ThermalContext& ctx, double work);

/// Single-shot work at failure probability epsilon: the protocol's (from the
/// rotated coherent input) and the best the dephased counterpart reaches.
struct LockedWork {
    double protocol_work;
    double counterpart_work;
};

LockedWork single_shot_work_comparison(const DensityMatrix& input, const ReferenceState& reference,
                                       const UnitaryMatrix& u, const thermo::HamiltonianSpec& system,
                                       const thermo::ThermalContext& ctx, double epsilon);

}  // namespace qwork::protocol
