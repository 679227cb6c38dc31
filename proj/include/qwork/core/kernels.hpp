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

// Data-parallel inner loops behind ComplexMatrix. Every kernel has a scalar
// reference implementation; wider variants are picked once at startup from
// what the CPU reports. Set QWORK_FORCE_SCALAR=1 to pin the reference path.

#include <complex>
#include <cstddef>
#include <string_view>
#include <vector>

namespace qwork::kernels {

using cplx = std::complex<double>;

enum class Isa { scalar, avx2 };

struct KernelTable {
    Isa isa;
    std::string_view name;
    /// c[m x n] = a[m x k] * b[k x n], all row-major and densely packed.
    void (*gemm)(std::size_t m, std::size_t n, std::size_t k, const cplx* a, const cplx* b, cplx* c);
    /// y += alpha * x
    void (*axpy)(std::size_t n, cplx alpha, const cplx* x, cplx* y);
    /// sum_i conj(x_i) * y_i
    cplx (*dotc)(std::size_t n, const cplx* x, const cplx* y);
    /// sum_i x_i * y_i
    cplx (*dotu)(std::size_t n, const cplx* x, const cplx* y);
};

const KernelTable& scalar_table();

/// Whether a variant was compiled in and the running CPU supports it.
bool available(Isa isa);

/// Table for a specific variant. Throws UsageError when unavailable.
const KernelTable& table(Isa isa);

/// The table used by the library. Chosen on first call.
const KernelTable& active();

std::vector<Isa> available_isas();

}  // namespace qwork::kernels
