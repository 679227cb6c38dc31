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

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qwork/thermo/thermo.hpp"

namespace qwork::protocol {

/// One (r, quality) cell of the improvement phase diagram. The coherent input
/// is the coherent Gibbs state with parameter r, rotated towards |1> by a
/// reference of the requested quality; the work drawn is -kT ln gamma_11.
struct SweepPoint {
    std::size_t r_index = 0;
    std::size_t quality_index = 0;
    double r = 0.0;
    double quality = 0.0;
    std::size_t levels = 0;
    double q = 0.0;
    double success_prob = 0.0;
    double failure_prob_incoherent = 0.0;
    bool improvement = false;
    double boundary_leakage = 0.0;
    std::optional<std::string> error;  // set when the cell could not be evaluated
};

struct SweepGrid {
    std::vector<double> r_grid;
    std::vector<double> quality_grid;
    std::size_t levels = 0;
    std::vector<SweepPoint> points;  // r-major: index = r_index * quality_grid.size() + quality_index

    const SweepPoint& at(std::size_t r_index, std::size_t quality_index) const {
        return points[r_index * quality_grid.size() + quality_index];
    }
};

SweepPoint evaluate_sweep_point(double r, double quality, std::size_t levels, const thermo::ThermalContext& ctx);

/// Evaluates every grid cell; cells are independent and spread over `workers`
/// threads. Output order does not depend on scheduling.
SweepGrid sweep_improvement(const std::vector<double>& r_grid, const std::vector<double>& quality_grid,
                            std::size_t levels, const thermo::ThermalContext& ctx, std::size_t workers = 1);

/// Columns: r,quality,L,q,success_prob,failure_prob_incoherent,improvement,boundary_leakage
void write_sweep_csv(std::ostream& os, const SweepGrid& grid);

}  // namespace qwork::protocol
