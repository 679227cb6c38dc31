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

#include "qwork/protocol/sweep.hpp"

#include <cmath>
#include <ostream>

#include "qwork/app/format.hpp"
#include "qwork/core/errors.hpp"
#include "qwork/core/parallel.hpp"
#include "qwork/protocol/coherence_protocol.hpp"

namespace qwork::protocol {

SweepPoint evaluate_sweep_point(double r, double quality, std::size_t levels, const thermo::ThermalContext& ctx) {
    SweepPoint pt;
    pt.r = r;
    pt.quality = quality;
    pt.levels = levels;
    try {
        const GibbsTarget target(r);
        const ReferenceState reference = ReferenceState::with_quality(levels, quality);
        const thermo::HamiltonianSpec system = thermo::HamiltonianSpec::qubit(1.0);
        const UnitaryMatrix u = rotation_unitary(r, 0.0);
        const double work = extract_excited_work(DensityMatrix::basis(2, 1), system, ctx).work_on_success;
        const DephasedComparison cmp =
            compare_with_dephased(DensityMatrix(target.state()), reference, u, system, ctx, work);
        pt.q = quality_q(cmp.coherent_output);
        pt.success_prob = 1.0 - cmp.coherent_failure;
        pt.failure_prob_incoherent = cmp.counterpart_failure();
        pt.improvement = cmp.improvement();
        pt.boundary_leakage = cmp.boundary_leakage;
    } catch (const UsageError& e) {
        pt.error = e.what();
        pt.q = pt.success_prob = pt.failure_prob_incoherent = pt.boundary_leakage = std::nan("");
    }
    return pt;
}

SweepGrid sweep_improvement(const std::vector<double>& r_grid, const std::vector<double>& quality_grid,
                            std::size_t levels, const thermo::ThermalContext& ctx, std::size_t workers) {
    if (r_grid.empty() || quality_grid.empty()) {
        throw UsageError("sweep grids must be non-empty");
    }
    for (double r : r_grid) {
        if (!(r > 0.0 && r < 1.0)) {
            throw UsageError("r grid values must lie in (0, 1)");
        }
    }
    for (double t : quality_grid) {
        if (!(t >= 0.0 && t <= 1.0)) {
            throw UsageError("quality grid values must lie in [0, 1]");
        }
    }
    SweepGrid grid{r_grid, quality_grid, levels, {}};
    grid.points.resize(r_grid.size() * quality_grid.size());
    parallel_for(grid.points.size(), workers, [&](std::size_t idx) {
        const std::size_t i = idx / quality_grid.size();
        const std::size_t j = idx % quality_grid.size();
        SweepPoint pt = evaluate_sweep_point(r_grid[i], quality_grid[j], levels, ctx);
        pt.r_index = i;
        pt.quality_index = j;
        grid.points[idx] = std::move(pt);
    });
    return grid;
}

void write_sweep_csv(std::ostream& os, const SweepGrid& grid) {
    os << "r,quality,L,q,success_prob,failure_prob_incoherent,improvement,boundary_leakage\n";
    for (const auto& pt : grid.points) {
        os << app::fmt_double(pt.r) << ',' << app::fmt_double(pt.quality) << ',' << pt.levels << ','
           << app::fmt_double(pt.q) << ',' << app::fmt_double(pt.success_prob) << ','
           << app::fmt_double(pt.failure_prob_incoherent) << ',' << (pt.error ? "error" : pt.improvement ? "1" : "0")
           << ',' << app::fmt_double(pt.boundary_leakage) << '\n';
    }
}

}  // namespace qwork::protocol
