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

#include <cstdlib>

#include "qwork/core/errors.hpp"
#include "qwork/core/kernels.hpp"
#include "test_util.hpp"

namespace qwork {
namespace {

using testing::naive_product;
using testing::random_matrix;
using testing::random_vector;

struct Shape {
    std::size_t m, n, k;
};

const std::vector<Shape> kShapes = {{1, 1, 1}, {2, 2, 2}, {3, 5, 7}, {4, 4, 4},  {8, 8, 8},
                                    {17, 13, 9}, {1, 33, 5}, {31, 1, 30}, {64, 33, 31}, {50, 200, 3}};

TEST(Kernels, ScalarAlwaysAvailable) {
    EXPECT_TRUE(kernels::available(kernels::Isa::scalar));
    EXPECT_EQ(kernels::table(kernels::Isa::scalar).isa, kernels::Isa::scalar);
    ASSERT_FALSE(kernels::available_isas().empty());
}

TEST(Kernels, ForcedScalarIsHonoured) {
    const char* forced = std::getenv("QWORK_FORCE_SCALAR");
    if (forced != nullptr && std::string(forced) == "1") {
        EXPECT_EQ(kernels::active().isa, kernels::Isa::scalar);
    } else {
        GTEST_SKIP() << "QWORK_FORCE_SCALAR not set";
    }
}

TEST(Kernels, UnavailableVariantThrows) {
    if (kernels::available(kernels::Isa::avx2)) {
        GTEST_SKIP() << "AVX2 available here";
    }
    EXPECT_THROW(kernels::table(kernels::Isa::avx2), UsageError);
}

class KernelVariant : public ::testing::TestWithParam<kernels::Isa> {
   protected:
    void SetUp() override {
        if (!kernels::available(GetParam())) {
            GTEST_SKIP() << "variant unavailable";
        }
    }
    const kernels::KernelTable& t() const { return kernels::table(GetParam()); }
};

TEST_P(KernelVariant, GemmMatchesTripleLoop) {
    Rng rng(11);
    for (const auto& s : kShapes) {
        const auto a = random_matrix(s.m, s.k, rng);
        const auto b = random_matrix(s.k, s.n, rng);
        ComplexMatrix c(s.m, s.n);
        t().gemm(s.m, s.n, s.k, a.data().data(), b.data().data(), c.data().data());
        EXPECT_LT(c.max_abs_diff(naive_product(a, b)), 1e-12 * static_cast<double>(s.k + 1))
            << s.m << "x" << s.n << "x" << s.k;
    }
}

TEST_P(KernelVariant, GemmOverwritesOutput) {
    Rng rng(12);
    const auto a = random_matrix(5, 6, rng);
    const auto b = random_matrix(6, 7, rng);
    ComplexMatrix c = random_matrix(5, 7, rng);
    t().gemm(5, 7, 6, a.data().data(), b.data().data(), c.data().data());
    EXPECT_LT(c.max_abs_diff(naive_product(a, b)), 1e-12);
}

TEST_P(KernelVariant, VectorKernelsMatchDefinitions) {
    Rng rng(13);
    for (std::size_t n = 0; n < 40; ++n) {
        const auto x = random_vector(n, rng);
        auto y = random_vector(n, rng);
        const cplx alpha{0.3, -1.7};
        cplx dc = 0.0, du = 0.0;
        auto expect_y = y;
        for (std::size_t i = 0; i < n; ++i) {
            dc += std::conj(x[i]) * y[i];
            du += x[i] * y[i];
            expect_y[i] += alpha * x[i];
        }
        EXPECT_LT(std::abs(t().dotc(n, x.data(), y.data()) - dc), 1e-12 * (n + 1));
        EXPECT_LT(std::abs(t().dotu(n, x.data(), y.data()) - du), 1e-12 * (n + 1));
        t().axpy(n, alpha, x.data(), y.data());
        for (std::size_t i = 0; i < n; ++i) {
            EXPECT_LT(std::abs(y[i] - expect_y[i]), 1e-13);
        }
    }
}

TEST_P(KernelVariant, AgreesWithScalarReference) {
    const auto& ref = kernels::scalar_table();
    Rng rng(14);
    for (const auto& s : kShapes) {
        const auto a = random_matrix(s.m, s.k, rng);
        const auto b = random_matrix(s.k, s.n, rng);
        ComplexMatrix c1(s.m, s.n), c2(s.m, s.n);
        ref.gemm(s.m, s.n, s.k, a.data().data(), b.data().data(), c1.data().data());
        t().gemm(s.m, s.n, s.k, a.data().data(), b.data().data(), c2.data().data());
        EXPECT_LT(c1.max_abs_diff(c2), 1e-12 * static_cast<double>(s.k + 1));
        const std::size_t n = s.m * s.k;
        EXPECT_LT(std::abs(ref.dotc(n, a.data().data(), a.data().data()) -
                           t().dotc(n, a.data().data(), a.data().data())),
                  1e-10);
    }
}

INSTANTIATE_TEST_SUITE_P(AllVariants, KernelVariant, ::testing::Values(kernels::Isa::scalar, kernels::Isa::avx2),
                         [](const auto& info) {
                             return std::string(info.param == kernels::Isa::scalar ? "scalar" : "avx2");
                         });

TEST(ComplexMatrixOps, KronMatchesIndexDefinition) {
    Rng rng(15);
    const auto a = random_matrix(2, 3, rng);
    const auto b = random_matrix(4, 2, rng);
    const auto k = kron(a, b);
    ASSERT_EQ(k.rows(), 8u);
    ASSERT_EQ(k.cols(), 6u);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t p = 0; p < 4; ++p)
                for (std::size_t q = 0; q < 2; ++q) EXPECT_EQ(k(i * 4 + p, j * 2 + q), a(i, j) * b(p, q));
}

TEST(ComplexMatrixOps, MixedProductProperty) {
    Rng rng(16);
    const auto a = random_matrix(3, 3, rng), b = random_matrix(2, 2, rng);
    const auto c = random_matrix(3, 3, rng), d = random_matrix(2, 2, rng);
    EXPECT_LT((kron(a, b) * kron(c, d)).max_abs_diff(kron(a * c, b * d)), 1e-11);
}

TEST(ComplexMatrixOps, MatrixVectorAndTraceOfProduct) {
    Rng rng(17);
    const auto a = random_matrix(6, 5, rng);
    const auto v = random_vector(5, rng);
    const auto av = a * std::span<const cplx>(v);
    for (std::size_t i = 0; i < 6; ++i) {
        cplx s = 0.0;
        for (std::size_t k = 0; k < 5; ++k) s += a(i, k) * v[k];
        EXPECT_LT(std::abs(av[i] - s), 1e-12);
    }
    const auto x = random_matrix(5, 6, rng);
    EXPECT_LT(std::abs(trace_of_product(a, x) - (a * x).trace()), 1e-11);
    EXPECT_LT(conjugate(a, ComplexMatrix::identity(5)).max_abs_diff(a * a.adjoint()), 1e-12);
}

TEST(ComplexMatrixOps, ShapeErrors) {
    EXPECT_THROW(ComplexMatrix(2, 3) * ComplexMatrix(2, 3), UsageError);
    EXPECT_THROW(ComplexMatrix(2, 3).trace(), UsageError);
    EXPECT_THROW((ComplexMatrix{{1.0, 2.0}, {3.0}}), UsageError);
}

}  // namespace
}  // namespace qwork
