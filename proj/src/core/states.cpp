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

#include "qwork/core/states.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qwork/core/errors.hpp"
#include "qwork/core/linalg.hpp"

namespace qwork {
namespace {

void validate_density(const ComplexMatrix& m) {
    if (!m.is_square() || m.rows() == 0) {
        throw ValidationError("density matrix must be square and non-empty");
    }
    if (!m.is_hermitian(tol::kHermitian)) {
        throw ValidationError("density matrix is not Hermitian");
    }
    const cplx tr = m.trace();
    if (std::abs(tr.real() - 1.0) > tol::kTrace || std::abs(tr.imag()) > tol::kTrace) {
        throw ValidationError("density matrix trace is " + std::to_string(tr.real()) + ", expected 1");
    }
    const auto vals = eigvalsh(m);
    if (vals.front() < -tol::kNegativeEigen) {
        throw ValidationError("density matrix has negative eigenvalue " + std::to_string(vals.front()));
    }
}

}  // namespace

PureState::PureState(std::vector<cplx> amplitudes) : amps_(std::move(amplitudes)) {
    if (amps_.empty()) {
        throw ValidationError("pure state must have positive dimension");
    }
    const double n = norm(amps_);
    if (std::abs(n - 1.0) > tol::kNorm) {
        throw ValidationError("pure state norm is " + std::to_string(n) + ", expected 1");
    }
}

PureState PureState::basis(std::size_t dim, std::size_t index) {
    if (index >= dim) {
        throw UsageError("basis index out of range");
    }
    std::vector<cplx> a(dim);
    a[index] = 1.0;
    return PureState(std::move(a));
}

PureState PureState::normalized(std::vector<cplx> amplitudes) {
    const double n = norm(amplitudes);
    if (n == 0.0) {
        throw ValidationError("cannot normalize the zero vector");
    }
    for (auto& a : amplitudes) {
        a /= n;
    }
    return PureState(std::move(amplitudes));
}

DensityMatrix::DensityMatrix(ComplexMatrix m) : m_(std::move(m)) { validate_density(m_); }

DensityMatrix::DensityMatrix(const PureState& psi)
    : m_(ComplexMatrix::outer(psi.amplitudes(), psi.amplitudes())) {}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
    std::vector<double> p(dim, 1.0 / static_cast<double>(dim));
    return diagonal(p);
}

DensityMatrix DensityMatrix::basis(std::size_t dim, std::size_t index) {
    return DensityMatrix(PureState::basis(dim, index));
}

DensityMatrix DensityMatrix::diagonal(std::span<const double> populations) {
    return DensityMatrix(ComplexMatrix::diagonal(populations));
}

DensityMatrix DensityMatrix::from_channel_output(ComplexMatrix m) {
    if (!m.is_square()) {
        throw ValidationError("channel output is not square");
    }
    const std::size_t n = m.rows();
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = m(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            const cplx avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
            m(i, j) = avg;
            m(j, i) = std::conj(avg);
        }
    }
    const double tr = m.trace().real();
    if (std::abs(tr - 1.0) > 1e-8) {
        throw ValidationError("channel output trace is " + std::to_string(tr) + ", expected 1");
    }
    m *= 1.0 / tr;
    return DensityMatrix(std::move(m));
}

UnitaryMatrix::UnitaryMatrix(ComplexMatrix m) : m_(std::move(m)) {
    if (!m_.is_square() || m_.rows() == 0) {
        throw ValidationError("unitary must be square and non-empty");
    }
    const ComplexMatrix gram = m_.adjoint() * m_;
    if (gram.max_abs_diff(ComplexMatrix::identity(m_.rows())) > tol::kUnitary) {
        throw ValidationError("matrix is not unitary");
    }
}

UnitaryMatrix UnitaryMatrix::identity(std::size_t dim) { return UnitaryMatrix(ComplexMatrix::identity(dim)); }

UnitaryMatrix UnitaryMatrix::adjoint() const { return UnitaryMatrix(m_.adjoint()); }

UnitaryMatrix operator*(const UnitaryMatrix& a, const UnitaryMatrix& b) {
    return UnitaryMatrix(a.matrix() * b.matrix());
}

PureState operator*(const UnitaryMatrix& u, const PureState& psi) {
    return PureState::normalized(u.matrix() * psi.amplitudes());
}

PureState tensor(const PureState& a, const PureState& b) {
    std::vector<cplx> out;
    out.reserve(a.dim() * b.dim());
    for (const cplx& x : a.amplitudes()) {
        for (const cplx& y : b.amplitudes()) {
            out.push_back(x * y);
        }
    }
    return PureState(std::move(out));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
    return DensityMatrix::from_channel_output(kron(a.matrix(), b.matrix()));
}

UnitaryMatrix tensor(const UnitaryMatrix& a, const UnitaryMatrix& b) {
    return UnitaryMatrix(kron(a.matrix(), b.matrix()));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> dims, std::size_t keep) {
    if (dims.empty() || keep >= dims.size()) {
        throw UsageError("partial_trace: kept subsystem index out of range");
    }
    const std::size_t total = std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
    if (total != rho.dim()) {
        throw UsageError("partial_trace: subsystem dimensions do not multiply to the state dimension");
    }
    // Split each index as (outer, kept, inner) with kept the digit of subsystem `keep`.
    const std::size_t dk = dims[keep];
    std::size_t inner = 1;
    for (std::size_t i = keep + 1; i < dims.size(); ++i) {
        inner *= dims[i];
    }
    const std::size_t outer = total / (dk * inner);
    ComplexMatrix out(dk, dk);
    const ComplexMatrix& m = rho.matrix();
    for (std::size_t a = 0; a < dk; ++a) {
        for (std::size_t b = 0; b < dk; ++b) {
            cplx s{};
            for (std::size_t o = 0; o < outer; ++o) {
                for (std::size_t i = 0; i < inner; ++i) {
                    const std::size_t r = (o * dk + a) * inner + i;
                    const std::size_t c = (o * dk + b) * inner + i;
                    s += m(r, c);
                }
            }
            out(a, b) = s;
        }
    }
    return DensityMatrix::from_channel_output(std::move(out));
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
    if (rho.dim() != sigma.dim()) {
        throw UsageError("fidelity: dimension mismatch");
    }
    const ComplexMatrix sr = sqrtm_psd(rho.matrix());
    ComplexMatrix inner_op = sr * sigma.matrix() * sr;
    // Hermitian up to rounding; average with its adjoint before diagonalizing.
    inner_op = 0.5 * (inner_op + inner_op.adjoint());
    const auto vals = clamp_psd_spectrum(eigvalsh(inner_op), tol::kNegativeEigen);
    double f = 0.0;
    for (double v : vals) {
        f += std::sqrt(v);
    }
    return std::clamp(f, 0.0, 1.0);
}

double fidelity(const PureState& a, const PureState& b) {
    if (a.dim() != b.dim()) {
        throw UsageError("fidelity: dimension mismatch");
    }
    return std::clamp(std::abs(inner(a.amplitudes(), b.amplitudes())), 0.0, 1.0);
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
    if (rho.dim() != sigma.dim()) {
        throw UsageError("trace_distance: dimension mismatch");
    }
    const auto vals = eigvalsh(rho.matrix() - sigma.matrix());
    double s = 0.0;
    for (double v : vals) {
        s += std::abs(v);
    }
    return std::clamp(0.5 * s, 0.0, 1.0);
}

double von_neumann_entropy(const DensityMatrix& rho) {
    const auto vals = eigvalsh(rho.matrix());
    double s = 0.0;
    for (double v : vals) {
        if (v > 1e-12) {
            s -= v * std::log(v);
        }
    }
    return std::max(0.0, s);
}

DensityMatrix apply_unitary(const UnitaryMatrix& u, const DensityMatrix& rho) {
    if (u.dim() != rho.dim()) {
        throw UsageError("apply_unitary: dimension mismatch");
    }
    return DensityMatrix::from_channel_output(conjugate(u.matrix(), rho.matrix()));
}

cplx expectation(const DensityMatrix& rho, const ComplexMatrix& op) { return trace_of_product(rho.matrix(), op); }

}  // namespace qwork
