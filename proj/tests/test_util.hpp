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

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "qwork/core/complex_matrix.hpp"
#include "qwork/core/random.hpp"
#include "qwork/core/states.hpp"

namespace qwork::testing {

inline ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
    std::normal_distribution<double> g;
    ComplexMatrix m(rows, cols);
    for (auto& x : m.data()) {
        x = {g(rng), g(rng)};
    }
    return m;
}

inline std::vector<cplx> random_vector(std::size_t n, Rng& rng) {
    std::normal_distribution<double> g;
    std::vector<cplx> v(n);
    for (auto& x : v) {
        x = {g(rng), g(rng)};
    }
    return v;
}

// Straight triple loop; the oracle for every product kernel.
inline ComplexMatrix naive_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            cplx s = 0.0;
            for (std::size_t k = 0; k < a.cols(); ++k) {
                s += a(i, k) * b(k, j);
            }
            c(i, j) = s;
        }
    }
    return c;
}

inline double max_abs(const ComplexMatrix& a, const ComplexMatrix& b) { return a.max_abs_diff(b); }

}  // namespace qwork::testing
