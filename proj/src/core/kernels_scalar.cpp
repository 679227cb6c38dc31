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

#include "qwork/core/kernels.hpp"

#include <algorithm>

namespace qwork::kernels {
namespace {

void gemm_scalar(std::size_t m, std::size_t n, std::size_t k, const cplx* a, const cplx* b, cplx* c) {
    std::fill(c, c + m * n, cplx{});
    for (std::size_t i = 0; i < m; ++i) {
        cplx* crow = c + i * n;
        for (std::size_t p = 0; p < k; ++p) {
            const cplx aip = a[i * k + p];
            if (aip == cplx{}) {
                continue;
            }
            const cplx* brow = b + p * n;
            for (std::size_t j = 0; j < n; ++j) {
                crow[j] += aip * brow[j];
            }
        }
    }
}

void axpy_scalar(std::size_t n, cplx alpha, const cplx* x, cplx* y) {
    for (std::size_t i = 0; i < n; ++i) {
        y[i] += alpha * x[i];
    }
}

cplx dotc_scalar(std::size_t n, const cplx* x, const cplx* y) {
    cplx acc{};
    for (std::size_t i = 0; i < n; ++i) {
        acc += std::conj(x[i]) * y[i];
    }
    return acc;
}

cplx dotu_scalar(std::size_t n, const cplx* x, const cplx* y) {
    cplx acc{};
    for (std::size_t i = 0; i < n; ++i) {
        acc += x[i] * y[i];
    }
    return acc;
}

}  // namespace

const KernelTable& scalar_table() {
    static const KernelTable t{Isa::scalar, "scalar", gemm_scalar, axpy_scalar, dotc_scalar, dotu_scalar};
    return t;
}

}  // namespace qwork::kernels
