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

#include <optional>
#include <span>
#include <vector>

#include "qwork/core/states.hpp"

namespace qwork::thermo {

/// Hamiltonian given in its eigenbasis: H = sum_i energies[i] |i><i|.
class HamiltonianSpec {
   public:
    explicit HamiltonianSpec(std::vector<double> energies);
    /// diag(0, gap)
    static HamiltonianSpec qubit(double gap = 1.0);

    std::size_t dim() const { return energies_.size(); }
    std::span<const double> energies() const { return energies_; }
    double min_energy() const;
    ComplexMatrix matrix() const;

    /// Basis indices grouped into energy eigenspaces (energies equal within
    /// 1e-12), ordered by ascending energy.
    std::vector<std::vector<std::size_t>> eigenspaces() const;

   private:
    std::vector<double> energies_;
};

class ThermalContext {
   public:
    explicit ThermalContext(double kT);
    double kT() const { return kT_; }
    double beta() const { return 1.0 / kT_; }

   private:
    double kT_;
};

struct WorkQuantity {
    enum class Kind { average, single_shot };

    double value = 0.0;
    Kind kind = Kind::average;
    std::optional<double> epsilon;  // set iff kind == single_shot

    static WorkQuantity average(double value) { return {value, Kind::average, std::nullopt}; }
    static WorkQuantity single_shot(double value, double epsilon) { return {value, Kind::single_shot, epsilon}; }
};

/// Tolerance on energy-basis off-diagonal magnitude for a state to count as
/// incoherent.
inline constexpr double kIncoherenceTol = 1e-9;

/// Largest |rho_ij| between different energy eigenspaces.
double coherence_magnitude(const DensityMatrix& rho, const HamiltonianSpec& h);
bool is_incoherent(const DensityMatrix& rho, const HamiltonianSpec& h, double tol = kIncoherenceTol);

DensityMatrix gibbs_state(const HamiltonianSpec& h, const ThermalContext& ctx);
/// Gibbs weights e^{-E_i/kT}/Z, computed with the minimum energy subtracted.
std::vector<double> gibbs_weights(const HamiltonianSpec& h, const ThermalContext& ctx);
/// -kT ln Z
double gibbs_free_energy(const HamiltonianSpec& h, const ThermalContext& ctx);

/// Tr(rho H) - kT S(rho)
double free_energy(const DensityMatrix& rho, const HamiltonianSpec& h, const ThermalContext& ctx);

/// sum_i Tr(P_i rho) P_i over energy eigenspace projectors; keeps the
/// in-eigenspace blocks for degenerate levels.
DensityMatrix dephase(const DensityMatrix& rho, const HamiltonianSpec& h);

/// F(rho) - F(gamma) for incoherent rho. Throws PreconditionError for
/// coherent input; use accessible_work for those.
WorkQuantity average_work(const DensityMatrix& rho, const HamiltonianSpec& h, const ThermalContext& ctx);

/// Work extractable without a coherent resource: average_work(dephase(rho)).
WorkQuantity accessible_work(const DensityMatrix& rho, const HamiltonianSpec& h, const ThermalContext& ctx);

/// F(rho) - F(dephase(rho)); the free energy that coherence holds but
/// incoherent processing cannot reach.
double work_locking_gap(const DensityMatrix& rho, const HamiltonianSpec& h, const ThermalContext& ctx);

/// Levels of an incoherent state in its energy-block eigenbasis.
struct SupportLevel {
    double probability;    // eigenvalue of rho
    double gibbs_weight;   // <v|gamma|v>
};
std::vector<SupportLevel> support_levels(const DensityMatrix& rho, const HamiltonianSpec& h,
                                         const ThermalContext& ctx);

/// Largest number of support levels the exhaustive smoothing search accepts.
inline constexpr std::size_t kMaxSmoothingLevels = 20;

/// Single-shot work with failure probability epsilon: -kT ln Tr(P gamma) for
/// the projector P onto the support of rho after discarding levels of total
/// probability at most epsilon, the discarded set chosen exhaustively to
/// minimize Tr(P gamma).
WorkQuantity single_shot_work(const DensityMatrix& rho, const HamiltonianSpec& h, const ThermalContext& ctx,
                              double epsilon);

/// Smallest failure probability at which single_shot_work reaches `work`
/// (within 1e-12). Returns 1 when no admissible projector gets there.
double single_shot_failure(const DensityMatrix& rho, const HamiltonianSpec& h, const ThermalContext& ctx,
                           double work);

/// Minimum energy cost kT (S(rho) - S(rho')) of turning rho into rho'. Negative
/// when the entropy grows.
double landauer_cost(const DensityMatrix& rho, const DensityMatrix& rho_prime, const ThermalContext& ctx);

}  // namespace qwork::thermo
