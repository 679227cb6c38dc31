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

#include <string>

#include "qwork/core/errors.hpp"
#include "qwork/homogenizer/homogenizer.hpp"

namespace qwork::homogenizer {
namespace {

// rho <- U_{0k} rho U_{0k}^dagger for a two-qubit gate on the system (qubit 0,
// most significant bit) and reservoir qubit k (1..N).
void apply_pair_gate(ComplexMatrix& rho, const UnitaryMatrix& gate, std::size_t qubits, std::size_t k) {
    const std::size_t dim = rho.rows();
    const std::size_t bit0 = std::size_t{1} << (qubits - 1);
    const std::size_t bitk = std::size_t{1} << (qubits - 1 - k);
    cplx g[4][4];
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            g[a][b] = gate(a, b);
        }
    }
    // Local two-qubit index ab (a = system bit, b = reservoir bit) matches the
    // |system, reservoir> ordering of the gate.
    auto offsets = [&](std::size_t base, std::size_t idx[4]) {
        idx[0] = base;
        idx[1] = base | bitk;
        idx[2] = base | bit0;
        idx[3] = base | bit0 | bitk;
    };
    std::size_t idx[4];
    cplx v[4];
    // Left multiplication: columns.
    for (std::size_t base = 0; base < dim; ++base) {
        if (base & (bit0 | bitk)) {
            continue;
        }
        offsets(base, idx);
        for (std::size_t c = 0; c < dim; ++c) {
            for (int a = 0; a < 4; ++a) {
                v[a] = rho(idx[a], c);
            }
            for (int a = 0; a < 4; ++a) {
                rho(idx[a], c) = g[a][0] * v[0] + g[a][1] * v[1] + g[a][2] * v[2] + g[a][3] * v[3];
            }
        }
    }
    // Right multiplication by the adjoint: rows.
    for (std::size_t base = 0; base < dim; ++base) {
        if (base & (bit0 | bitk)) {
            continue;
        }
        offsets(base, idx);
        for (std::size_t r = 0; r < dim; ++r) {
            for (int a = 0; a < 4; ++a) {
                v[a] = rho(r, idx[a]);
            }
            for (int b = 0; b < 4; ++b) {
                rho(r, idx[b]) = v[0] * std::conj(g[b][0]) + v[1] * std::conj(g[b][1]) + v[2] * std::conj(g[b][2]) +
                                 v[3] * std::conj(g[b][3]);
            }
        }
    }
}

// Single-qubit marginal of qubit k without validating the full joint state.
DensityMatrix qubit_marginal(const ComplexMatrix& rho, std::size_t qubits, std::size_t k) {
    const std::size_t bit = std::size_t{1} << (qubits - 1 - k);
    ComplexMatrix out(2, 2);
    for (std::size_t i = 0; i < rho.rows(); ++i) {
        if (i & bit) {
            continue;
        }
        out(0, 0) += rho(i, i);
        out(0, 1) += rho(i, i | bit);
        out(1, 0) += rho(i | bit, i);
        out(1, 1) += rho(i | bit, i | bit);
    }
    return DensityMatrix::from_channel_output(std::move(out));
}

}  // namespace

HomogenizeResult homogenize_exact(const DensityMatrix& rho, const HomogenizerConfig& cfg) {
    cfg.validate();
    if (rho.dim() != 2) {
        throw UsageError("homogenize_exact expects a qubit system");
    }
    if (cfg.reservoir_size > kMaxExactReservoir) {
        throw UsageError("exact homogenizer simulation is limited to N <= " + std::to_string(kMaxExactReservoir));
    }
    const std::size_t qubits = cfg.reservoir_size + 1;
    ComplexMatrix joint = rho.matrix();
    for (std::size_t k = 0; k < cfg.reservoir_size; ++k) {
        joint = kron(joint, cfg.xi.matrix());
    }
    const UnitaryMatrix swap = partial_swap(cfg.eta);
    HomogenizeResult out{rho, {}, {}};
    for (std::size_t k = 1; k <= cfg.reservoir_size; ++k) {
        apply_pair_gate(joint, swap, qubits, k);
        out.system = qubit_marginal(joint, qubits, 0);
        out.distance_to_xi.push_back(trace_distance(out.system, cfg.xi));
    }
    for (std::size_t k = 1; k <= cfg.reservoir_size; ++k) {
        out.reservoir.push_back(qubit_marginal(joint, qubits, k));
    }
    return out;
}

}  // namespace qwork::homogenizer
