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

#include <functional>
#include <vector>

#include "qwork/core/complex_matrix.hpp"

namespace qwork {

struct HermitianEigen {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // columns are eigenvectors
};

/// Eigendecomposition of a Hermitian matrix. Only the lower triangle is read.
HermitianEigen eigh(const ComplexMatrix& h);

std::vector<double> eigvalsh(const ComplexMatrix& h);

/// V f(Lambda) V^dagger for Hermitian h.
ComplexMatrix hermitian_function(const ComplexMatrix& h, const std::function<double(double)>& f);

/// Eigenvalues in [-clamp_tol, 0) are treated as 0; anything more negative is
/// rejected with ValidationError.
std::vector<double> clamp_psd_spectrum(std::vector<double> values, double clamp_tol);

/// Principal square root of a PSD matrix.
ComplexMatrix sqrtm_psd(const ComplexMatrix& h, double clamp_tol = 1e-9);

}  // namespace qwork
