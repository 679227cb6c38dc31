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

#include "qwork/core/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "qwork/core/errors.hpp"

namespace qwork {
namespace {

Eigen::MatrixXcd to_eigen(const ComplexMatrix& h) {
    Eigen::MatrixXcd m(h.rows(), h.cols());
    for (std::size_t i = 0; i < h.rows(); ++i) {
        for (std::size_t j = 0; j < h.cols(); ++j) {
            m(i, j) = h(i, j);
        }
    }
    return m;
}

}  // namespace

HermitianEigen eigh(const ComplexMatrix& h) {
    if (!h.is_square()) {
        throw UsageError("eigh: matrix is not square");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(h));
    if (solver.info() != Eigen::Success) {
        throw ValidationError("eigh: Hermitian eigensolver did not converge");
    }
    HermitianEigen out;
    const auto& vals = solver.eigenvalues();
    const auto& vecs = solver.eigenvectors();
    out.values.assign(vals.data(), vals.data() + vals.size());
    out.vectors = ComplexMatrix(h.rows(), h.cols());
    for (std::size_t i = 0; i < h.rows(); ++i) {
        for (std::size_t j = 0; j < h.cols(); ++j) {
            out.vectors(i, j) = vecs(i, j);
        }
    }
    return out;
}

std::vector<double> eigvalsh(const ComplexMatrix& h) {
    if (!h.is_square()) {
        throw UsageError("eigvalsh: matrix is not square");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(h), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw ValidationError("eigvalsh: Hermitian eigensolver did not converge");
    }
    const auto& vals = solver.eigenvalues();
    return {vals.data(), vals.data() + vals.size()};
}

ComplexMatrix hermitian_function(const ComplexMatrix& h, const std::function<double(double)>& f) {
    const HermitianEigen e = eigh(h);
    const std::size_t n = h.rows();
    // V diag(f) V^dagger, built as (V * diag(f)) * V^dagger.
    ComplexMatrix scaled = e.vectors;
    for (std::size_t j = 0; j < n; ++j) {
        const double fj = f(e.values[j]);
        for (std::size_t i = 0; i < n; ++i) {
            scaled(i, j) *= fj;
        }
    }
    return scaled * e.vectors.adjoint();
}

std::vector<double> clamp_psd_spectrum(std::vector<double> values, double clamp_tol) {
    for (double& v : values) {
        if (v < 0.0) {
            if (v < -clamp_tol) {
                throw ValidationError("matrix is not positive semidefinite (eigenvalue " + std::to_string(v) + ")");
            }
            v = 0.0;
        }
    }
    return values;
}

ComplexMatrix sqrtm_psd(const ComplexMatrix& h, double clamp_tol) {
    HermitianEigen e = eigh(h);
    e.values = clamp_psd_spectrum(std::move(e.values), clamp_tol);
    const std::size_t n = h.rows();
    ComplexMatrix scaled = e.vectors;
    for (std::size_t j = 0; j < n; ++j) {
        const double s = std::sqrt(e.values[j]);
        for (std::size_t i = 0; i < n; ++i) {
            scaled(i, j) *= s;
        }
    }
    return scaled * e.vectors.adjoint();
}

}  // namespace qwork
