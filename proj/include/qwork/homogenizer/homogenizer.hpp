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

// Quantum homogenizer: a system qubit meets N reservoir qubits one at a time
// through the partial swap cos(eta) 1 + i sin(eta) SWAP. Between interactions
// only single-qubit reduced states are tracked.

#include <cstddef>
#include <iosfwd>
#include <string_view>
#include <utility>
#include <vector>

#include "qwork/core/states.hpp"

namespace qwork::homogenizer {

struct HomogenizerConfig {
    std::size_t reservoir_size;  // N
    double eta;                  // coupling, (0, pi/2]
    DensityMatrix xi;            // initial state of every reservoir qubit

    void validate() const;
};

UnitaryMatrix partial_swap(double eta);

/// Reduced states (system, reservoir) after one partial swap on rho (x) xi.
std::pair<DensityMatrix, DensityMatrix> interact(const DensityMatrix& rho, const DensityMatrix& xi,
                                                 const UnitaryMatrix& swap);

/// cos^2 rho + sin^2 xi + i sin cos (xi rho - rho xi); the system marginal of
/// one partial swap written out in closed form.
ComplexMatrix one_step_system_map(const DensityMatrix& rho, const DensityMatrix& xi, double eta);

struct HomogenizeResult {
    DensityMatrix system;
    std::vector<DensityMatrix> reservoir;
    /// trace distance of the system to xi after each interaction (size N)
    std::vector<double> distance_to_xi;
};

HomogenizeResult homogenize(const DensityMatrix& rho, const HomogenizerConfig& cfg);

/// Same interaction sequence on the full 2^(N+1)-dimensional joint state,
/// keeping all correlations. Exponential cost; limited to N <= 10.
HomogenizeResult homogenize_exact(const DensityMatrix& rho, const HomogenizerConfig& cfg);

inline constexpr std::size_t kMaxExactReservoir = 10;

enum class ReuseTask { pure_to_mixed, mixed_to_pure };

std::string_view to_string(ReuseTask task);
ReuseTask parse_reuse_task(std::string_view name);

/// Reservoir state, fresh input and target of each task.
struct TaskStates {
    DensityMatrix xi;
    DensityMatrix input;
    DensityMatrix target;
};
TaskStates task_states(ReuseTask task);

struct ReuseRecord {
    std::size_t use_index;   // 1-based
    double task_error;       // trace distance of the output to the task target
    double reservoir_drift;  // mean trace distance of the reservoir qubits from xi
};

/// M fresh inputs pass one after another through the same reservoir, which is
/// never reset.
std::vector<ReuseRecord> reuse_experiment(ReuseTask task, std::size_t uses, std::size_t reservoir_size, double eta);

void write_reuse_csv(std::ostream& os, const std::vector<ReuseRecord>& records, ReuseTask task,
                     std::size_t reservoir_size, double eta, bool header = true);

struct FeasibilityCell {
    std::size_t reservoir_size;
    double eta;
    bool feasible;               // every one of the M uses within eps_acc
    std::size_t max_feasible_uses;  // uses before the first one exceeding eps_acc
    double worst_error;
};

struct FeasibilityTable {
    ReuseTask task;
    std::size_t uses;
    double eps_acc;
    std::vector<std::size_t> n_grid;
    std::vector<double> eta_grid;
    std::vector<FeasibilityCell> cells;  // n-major

    const FeasibilityCell& at(std::size_t n_index, std::size_t eta_index) const {
        return cells[n_index * eta_grid.size() + eta_index];
    }
    /// For each eta, the smallest N that is feasible (0 if none on the grid).
    std::vector<std::size_t> frontier() const;
};

FeasibilityTable constructor_feasibility_scan(ReuseTask task, std::size_t uses, double eps_acc,
                                              const std::vector<std::size_t>& n_grid,
                                              const std::vector<double>& eta_grid, std::size_t workers = 1);

}  // namespace qwork::homogenizer
