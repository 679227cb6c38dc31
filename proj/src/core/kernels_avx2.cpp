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

// AVX2 + FMA variants. This translation unit is compiled with -mavx2 -mfma and
// must only be entered after the dispatcher has confirmed CPU support.

#include <immintrin.h>

#include <algorithm>

#include "qwork/core/kernels.hpp"

namespace qwork::kernels {
namespace {

// Two interleaved complex doubles per register: [re0, im0, re1, im1].
// a * b for a broadcast scalar a = (ar, ai):
//   even lanes: ar*br - ai*bi, odd lanes: ar*bi + ai*br
inline __m256d cmul_broadcast(__m256d ar, __m256d ai, __m256d b) {
    const __m256d bswap = _mm256_permute_pd(b, 0b0101);
    return _mm256_fmaddsub_pd(ar, b, _mm256_mul_pd(ai, bswap));
}

void gemm_avx2(std::size_t m, std::size_t n, std::size_t k, const cplx* a, const cplx* b, cplx* c) {
    std::fill(c, c + m * n, cplx{});
    const std::size_t n2 = n & ~std::size_t{1};
    for (std::size_t i = 0; i < m; ++i) {
        double* crow = reinterpret_cast<double*>(c + i * n);
        for (std::size_t p = 0; p < k; ++p) {
            const cplx aip = a[i * k + p];
            if (aip == cplx{}) {
                continue;
            }
            const __m256d ar = _mm256_set1_pd(aip.real());
            const __m256d ai = _mm256_set1_pd(aip.imag());
            const double* brow = reinterpret_cast<const double*>(b + p * n);
            std::size_t j = 0;
            for (; j + 4 <= n2; j += 4) {
                __m256d c0 = _mm256_loadu_pd(crow + 2 * j);
                __m256d c1 = _mm256_loadu_pd(crow + 2 * j + 4);
                c0 = _mm256_add_pd(c0, cmul_broadcast(ar, ai, _mm256_loadu_pd(brow + 2 * j)));
                c1 = _mm256_add_pd(c1, cmul_broadcast(ar, ai, _mm256_loadu_pd(brow + 2 * j + 4)));
                _mm256_storeu_pd(crow + 2 * j, c0);
                _mm256_storeu_pd(crow + 2 * j + 4, c1);
            }
            for (; j < n2; j += 2) {
                __m256d c0 = _mm256_loadu_pd(crow + 2 * j);
                c0 = _mm256_add_pd(c0, cmul_broadcast(ar, ai, _mm256_loadu_pd(brow + 2 * j)));
                _mm256_storeu_pd(crow + 2 * j, c0);
            }
            for (; j < n; ++j) {
                c[i * n + j] += aip * b[p * n + j];
            }
        }
    }
}

void axpy_avx2(std::size_t n, cplx alpha, const cplx* x, cplx* y) {
    const __m256d ar = _mm256_set1_pd(alpha.real());
    const __m256d ai = _mm256_set1_pd(alpha.imag());
    const double* xd = reinterpret_cast<const double*>(x);
    double* yd = reinterpret_cast<double*>(y);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
        _mm256_storeu_pd(yd + 2 * i, _mm256_add_pd(yv, cmul_broadcast(ar, ai, _mm256_loadu_pd(xd + 2 * i))));
    }
    for (; i < n; ++i) {
        y[i] += alpha * x[i];
    }
}

// Accumulates sum x_i * y_i (or conj(x_i) * y_i) with separate re/im
// partial sums: acc_rr = x.re*y.re per lane, acc_ri = x.re*y.im etc.
template <bool Conj>
cplx dot_avx2(std::size_t n, const cplx* x, const cplx* y) {
    const double* xd = reinterpret_cast<const double*>(x);
    const double* yd = reinterpret_cast<const double*>(y);
    __m256d same = _mm256_setzero_pd();   // [xr*yr, xi*yi, ...]
    __m256d cross = _mm256_setzero_pd();  // [xr*yi, xi*yr, ...]
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
        const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
        same = _mm256_fmadd_pd(xv, yv, same);
        cross = _mm256_fmadd_pd(xv, _mm256_permute_pd(yv, 0b0101), cross);
    }
    alignas(32) double s[4];
    alignas(32) double t[4];
    _mm256_store_pd(s, same);
    _mm256_store_pd(t, cross);
    const double rr = s[0] + s[2];
    const double ii = s[1] + s[3];
    const double ri = t[0] + t[2];
    const double ir = t[1] + t[3];
    cplx acc = Conj ? cplx{rr + ii, ri - ir} : cplx{rr - ii, ri + ir};
    for (; i < n; ++i) {
        acc += (Conj ? std::conj(x[i]) : x[i]) * y[i];
    }
    return acc;
}

cplx dotc_avx2(std::size_t n, const cplx* x, const cplx* y) { return dot_avx2<true>(n, x, y); }
cplx dotu_avx2(std::size_t n, const cplx* x, const cplx* y) { return dot_avx2<false>(n, x, y); }

}  // namespace

const KernelTable& avx2_table() {
    static const KernelTable t{Isa::avx2, "avx2", gemm_avx2, axpy_avx2, dotc_avx2, dotu_avx2};
    return t;
}

}  // namespace qwork::kernels
