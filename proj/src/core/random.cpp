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

#include "qwork/core/random.hpp"

#include <Eigen/QR>
#include <cmath>

namespace qwork {
namespace {

Eigen::MatrixXcd ginibre(std::size_t rows, std::size_t cols, Rng& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::MatrixXcd g(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            const double re = normal(rng);
            const double im = normal(rng);
            g(i, j) = cplx{re, im};
        }
    }
    return g;
}

}  // namespace

UnitaryMatrix haar_unitary(std::size_t dim, Rng& rng) {
    const Eigen::MatrixXcd g = ginibre(dim, dim, rng);
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    ComplexMatrix u(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
        const cplx d = r(j, j);
        const cplx phase = std::abs(d) > 0.0 ? d / std::abs(d) : cplx{1.0};
        for (std::size_t i = 0; i < dim; ++i) {
            u(i, j) = q(i, j) * phase;
        }
    }
    return UnitaryMatrix(std::move(u));
}

PureState random_pure_state(std::size_t dim, Rng& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<cplx> a(dim);
    for (auto& x : a) {
        const double re = normal(rng);
        const double im = normal(rng);
        x = cplx{re, im};
    }
    return PureState::normalized(std::move(a));
}

DensityMatrix random_density_matrix(std::size_t dim, Rng& rng) {
    const Eigen::MatrixXcd g = ginibre(dim, dim, rng);
    const Eigen::MatrixXcd w = g * g.adjoint();
    const double tr = w.trace().real();
    ComplexMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            m(i, j) = w(i, j) / tr;
        }
    }
    return DensityMatrix::from_channel_output(std::move(m));
}

}  // namespace qwork
