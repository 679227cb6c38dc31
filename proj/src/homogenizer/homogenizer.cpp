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

#include "qwork/homogenizer/homogenizer.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <ostream>
#include <string>

#include "qwork/app/format.hpp"
#include "qwork/core/errors.hpp"
#include "qwork/core/parallel.hpp"

namespace qwork::homogenizer {

void HomogenizerConfig::validate() const {
    if (reservoir_size == 0) {
        throw UsageError("homogenizer needs at least one reservoir qubit");
    }
    if (!(eta > 0.0 && eta <= std::numbers::pi / 2 + 1e-15)) {
        throw UsageError("coupling eta must lie in (0, pi/2]");
    }
    if (xi.dim() != 2) {
        throw UsageError("reservoir state must be a qubit");
    }
}

UnitaryMatrix partial_swap(double eta) {
    const double c = std::cos(eta);
    const cplx is{0.0, std::sin(eta)};
    // cos(eta) I + i sin(eta) SWAP in the |00>,|01>,|10>,|11> basis
    return UnitaryMatrix(ComplexMatrix{
        {c + is, 0.0, 0.0, 0.0},
        {0.0, c, is, 0.0},
        {0.0, is, c, 0.0},
        {0.0, 0.0, 0.0, c + is},
    });
}

std::pair<DensityMatrix, DensityMatrix> interact(const DensityMatrix& rho, const DensityMatrix& xi,
                                                 const UnitaryMatrix& swap) {
    const DensityMatrix joint = apply_unitary(swap, tensor(rho, xi));
    const std::array<std::size_t, 2> dims{2, 2};
    return {partial_trace(joint, dims, 0), partial_trace(joint, dims, 1)};
}

ComplexMatrix one_step_system_map(const DensityMatrix& rho, const DensityMatrix& xi, double eta) {
    const double c = std::cos(eta);
    const double s = std::sin(eta);
    const ComplexMatrix comm = xi.matrix() * rho.matrix() - rho.matrix() * xi.matrix();
    return (c * c) * rho.matrix() + (s * s) * xi.matrix() + cplx{0.0, s * c} * comm;
}

HomogenizeResult homogenize(const DensityMatrix& rho, const HomogenizerConfig& cfg) {
    cfg.validate();
    if (rho.dim() != 2) {
        throw UsageError("homogenize expects a qubit system");
    }
    const UnitaryMatrix swap = partial_swap(cfg.eta);
    HomogenizeResult out{rho, {}, {}};
    out.reservoir.reserve(cfg.reservoir_size);
    out.distance_to_xi.reserve(cfg.reservoir_size);
    for (std::size_t k = 0; k < cfg.reservoir_size; ++k) {
        auto [sys, res] = interact(out.system, cfg.xi, swap);
        out.system = std::move(sys);
        out.reservoir.push_back(std::move(res));
        out.distance_to_xi.push_back(trace_distance(out.system, cfg.xi));
    }
    return out;
}

std::string_view to_string(ReuseTask task) {
    return task == ReuseTask::pure_to_mixed ? "pure_to_mixed" : "mixed_to_pure";
}

ReuseTask parse_reuse_task(std::string_view name) {
    if (name == "pure_to_mixed") {
        return ReuseTask::pure_to_mixed;
    }
    if (name == "mixed_to_pure") {
        return ReuseTask::mixed_to_pure;
    }
    throw UsageError("unknown reuse task '" + std::string(name) + "' (pure_to_mixed | mixed_to_pure)");
}

TaskStates task_states(ReuseTask task) {
    if (task == ReuseTask::pure_to_mixed) {
        const DensityMatrix mixed = DensityMatrix::maximally_mixed(2);
        return {mixed, DensityMatrix::basis(2, 0), mixed};
    }
    const DensityMatrix excited = DensityMatrix::basis(2, 1);
    return {excited, DensityMatrix::maximally_mixed(2), excited};
}

std::vector<ReuseRecord> reuse_experiment(ReuseTask task, std::size_t uses, std::size_t reservoir_size, double eta) {
    const TaskStates st = task_states(task);
    const HomogenizerConfig cfg{reservoir_size, eta, st.xi};
    cfg.validate();
    if (uses == 0) {
        throw UsageError("reuse experiment needs at least one use");
    }
    const UnitaryMatrix swap = partial_swap(eta);
    std::vector<DensityMatrix> reservoir(reservoir_size, st.xi);
    std::vector<ReuseRecord> records;
    records.reserve(uses);
    for (std::size_t m = 1; m <= uses; ++m) {
        DensityMatrix system = st.input;
        for (auto& qubit : reservoir) {
            auto [sys, res] = interact(system, qubit, swap);
            system = std::move(sys);
            qubit = std::move(res);
        }
        double drift = 0.0;
        for (const auto& qubit : reservoir) {
            drift += trace_distance(qubit, st.xi);
        }
        records.push_back({m, trace_distance(system, st.target), drift / static_cast<double>(reservoir_size)});
    }
    return records;
}

void write_reuse_csv(std::ostream& os, const std::vector<ReuseRecord>& records, ReuseTask task,
                     std::size_t reservoir_size, double eta, bool header) {
    if (header) {
        os << "use_index,task_error,reservoir_drift,N,eta,task\n";
    }
    for (const auto& r : records) {
        os << r.use_index << ',' << app::fmt_double(r.task_error) << ',' << app::fmt_double(r.reservoir_drift) << ','
           << reservoir_size << ',' << app::fmt_double(eta) << ',' << to_string(task) << '\n';
    }
}

std::vector<std::size_t> FeasibilityTable::frontier() const {
    std::vector<std::size_t> out(eta_grid.size(), 0);
    for (std::size_t j = 0; j < eta_grid.size(); ++j) {
        for (std::size_t i = 0; i < n_grid.size(); ++i) {
            const auto& c = at(i, j);
            if (c.feasible && (out[j] == 0 || c.reservoir_size < out[j])) {
                out[j] = c.reservoir_size;
            }
        }
    }
    return out;
}

FeasibilityTable constructor_feasibility_scan(ReuseTask task, std::size_t uses, double eps_acc,
                                              const std::vector<std::size_t>& n_grid,
                                              const std::vector<double>& eta_grid, std::size_t workers) {
    if (n_grid.empty() || eta_grid.empty()) {
        throw UsageError("feasibility scan grids must be non-empty");
    }
    if (!(eps_acc > 0.0)) {
        throw UsageError("accuracy threshold must be positive");
    }
    FeasibilityTable table{task, uses, eps_acc, n_grid, eta_grid, {}};
    table.cells.resize(n_grid.size() * eta_grid.size());
    parallel_for(table.cells.size(), workers, [&](std::size_t idx) {
        const std::size_t i = idx / eta_grid.size();
        const std::size_t j = idx % eta_grid.size();
        const auto records = reuse_experiment(task, uses, n_grid[i], eta_grid[j]);
        FeasibilityCell cell{n_grid[i], eta_grid[j], true, 0, 0.0};
        for (const auto& r : records) {
            cell.worst_error = std::max(cell.worst_error, r.task_error);
            if (r.task_error <= eps_acc && cell.feasible) {
                cell.max_feasible_uses = r.use_index;
            } else {
                cell.feasible = false;
            }
        }
        table.cells[idx] = cell;
    });
    return table;
}

}  // namespace qwork::homogenizer
