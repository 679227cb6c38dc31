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
#include <span>
#include <vector>

#include "qwork/core/complex_matrix.hpp"

namespace qwork {

namespace tol {
inline constexpr double kNorm = 1e-10;
inline constexpr double kHermitian = 1e-10;
inline constexpr double kTrace = 1e-10;
inline constexpr double kNegativeEigen = 1e-9;
inline constexpr double kUnitary = 1e-10;
}  // namespace tol

/// Unit-norm state vector.
class PureState {
   public:
    explicit PureState(std::vector<cplx> amplitudes);
    /// |index> in a dim-dimensional space.
    static PureState basis(std::size_t dim, std::size_t index);
    /// Normalizes before validating.
    static PureState normalized(std::vector<cplx> amplitudes);

    std::size_t dim() const { return amps_.size(); }
    std::span<const cplx> amplitudes() const { return amps_; }
    const cplx& operator[](std::size_t i) const { return amps_[i]; }

   private:
    std::vector<cplx> amps_;
};

/// Hermitian, unit-trace, positive semidefinite operator.
class DensityMatrix {
   public:
    explicit DensityMatrix(ComplexMatrix m);
    explicit DensityMatrix(const PureState& psi);

    static DensityMatrix maximally_mixed(std::size_t dim);
    static DensityMatrix basis(std::size_t dim, std::size_t index);
    static DensityMatrix diagonal(std::span<const double> populations);

    /// Symmetrizes and renormalizes the trace before validation. For outputs
    /// of channels that are valid up to rounding.
    static DensityMatrix from_channel_output(ComplexMatrix m);

    std::size_t dim() const { return m_.rows(); }
    const ComplexMatrix& matrix() const { return m_; }
    cplx operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

   private:
    ComplexMatrix m_;
};

class UnitaryMatrix {
   public:
    explicit UnitaryMatrix(ComplexMatrix m);
    static UnitaryMatrix identity(std::size_t dim);

    std::size_t dim() const { return m_.rows(); }
    const ComplexMatrix& matrix() const { return m_; }
    cplx operator()(std::size_t r, std::size_t c) const { return m_(r, c); }
    UnitaryMatrix adjoint() const;

   private:
    ComplexMatrix m_;
};

UnitaryMatrix operator*(const UnitaryMatrix& a, const UnitaryMatrix& b);
PureState operator*(const UnitaryMatrix& u, const PureState& psi);

PureState tensor(const PureState& a, const PureState& b);
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);
UnitaryMatrix tensor(const UnitaryMatrix& a, const UnitaryMatrix& b);

/// Reduced state on subsystem `keep` of a multipartite state with the given
/// subsystem dimensions (first subsystem is the slowest index).
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> dims, std::size_t keep);

/// Uhlmann root fidelity Tr sqrt(sqrt(rho) sigma sqrt(rho)); |<psi|phi>| for
/// pure states.
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);
double fidelity(const PureState& a, const PureState& b);

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Entropy in nats. Eigenvalues below 1e-12 contribute nothing.
double von_neumann_entropy(const DensityMatrix& rho);

DensityMatrix apply_unitary(const UnitaryMatrix& u, const DensityMatrix& rho);

/// Tr(rho * op)
cplx expectation(const DensityMatrix& rho, const ComplexMatrix& op);

}  // namespace qwork
