// Copyright 2026 The grover-mps Authors
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

#include "grover_mps/svd.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "gtest/gtest.h"
#include "test_util.hpp"

using namespace grover;
using namespace grover::numeric;

namespace {

template <Real T>
double isometry_defect_columns(const ComplexMatrix<T> &u) {
    return max_abs_diff(matmul(u.adjoint(), u).template cast<double>(), ComplexMatrix<double>::identity(u.cols()));
}

template <Real T>
double isometry_defect_rows(const ComplexMatrix<T> &vdag) {
    return max_abs_diff(matmul(vdag, vdag.adjoint()).template cast<double>(),
                        ComplexMatrix<double>::identity(vdag.rows()));
}

template <Real T>
void expect_valid_svd(const ComplexMatrix<T> &a, const SvdResult<T> &r) {
    const double eps = unit_roundoff<T>();
    ASSERT_EQ(r.s.size(), std::min(a.rows(), a.cols()));
    for (std::size_t i = 0; i < r.s.size(); ++i) {
        EXPECT_GE(r.s[i], T(0));
        if (i > 0) EXPECT_LE(r.s[i], r.s[i - 1]);
    }
    EXPECT_LE(double(max_abs_diff(r.reconstruct(), a)), 64 * eps * double(a.max_abs()) + 64 * eps);
    EXPECT_LE(isometry_defect_columns(r.u), 64 * eps);
    EXPECT_LE(isometry_defect_rows(r.vdag), 64 * eps);
}

}  // namespace

TEST(Svd, identity) {
    auto r = svd(ComplexMatrix<double>::identity(2));
    ASSERT_EQ(r.s.size(), 2u);
    EXPECT_EQ(r.s[0], 1.0);
    EXPECT_EQ(r.s[1], 1.0);
}

TEST(Svd, rank_one_symmetric) {
    ComplexMatrix<double> a(2, 2, {1, 1, 1, 1});
    auto r = svd(a);
    EXPECT_NEAR(r.s[0], 2.0, 1e-15);
    EXPECT_NEAR(r.s[1], 0.0, 1e-15);
    expect_valid_svd(a, r);
}

TEST(Svd, random_6x4_reconstructs) {
    std::mt19937_64 rng(6004);
    auto a = test_support::random_matrix<double>(6, 4, rng);
    auto r = svd(a);
    EXPECT_LE(max_abs_diff(r.reconstruct(), a), 64 * unit_roundoff<double>() * a.max_abs());
    expect_valid_svd(a, r);
}

TEST(Svd, wide_and_vector_shapes) {
    std::mt19937_64 rng(17);
    for (auto [m, n] : {std::pair<std::size_t, std::size_t>{1, 1}, {1, 7}, {7, 1}, {3, 8}, {2, 16}}) {
        auto a = test_support::random_matrix<double>(m, n, rng);
        expect_valid_svd(a, svd(a));
    }
}

TEST(Svd, zero_matrix_has_isometric_factors) {
    ComplexMatrix<double> a(4, 3);
    auto r = svd(a);
    for (double s : r.s) EXPECT_EQ(s, 0.0);
    expect_valid_svd(a, r);
}

TEST(Svd, rejects_non_finite_and_empty) {
    ComplexMatrix<double> a(2, 2, {1, 0, 0, std::numeric_limits<double>::quiet_NaN()});
    EXPECT_THROW(svd(a), InvalidInput);
    ComplexMatrix<double> inf(1, 1, {std::numeric_limits<double>::infinity()});
    EXPECT_THROW(svd(inf), InvalidInput);
    EXPECT_THROW(svd(ComplexMatrix<double>(0, 3)), InvalidInput);
}

TEST(Svd, rank_deficient_product) {
    // Rank-2 8x6 matrix: the trailing four singular values must vanish and
    // the completed U columns must still be orthonormal.
    std::mt19937_64 rng(99);
    auto a = matmul(test_support::random_matrix<double>(8, 2, rng), test_support::random_matrix<double>(2, 6, rng));
    auto r = svd(a);
    for (std::size_t i = 2; i < r.s.size(); ++i) EXPECT_LE(r.s[i], 1e-13 * r.s[0]);
    expect_valid_svd(a, r);
}

template <typename T>
class SvdProperty : public ::testing::Test {};
using Precisions = ::testing::Types<float, double>;
TYPED_TEST_SUITE(SvdProperty, Precisions);

TYPED_TEST(SvdProperty, reconstruction_and_isometry_up_to_64x64) {
    using T = TypeParam;
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::size_t> dim(1, 64);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t m = trial == 0 ? 64 : dim(rng);
        const std::size_t n = trial == 0 ? 64 : dim(rng);
        auto a = test_support::random_matrix<T>(m, n, rng);
        auto r = svd(a);
        const double eps = unit_roundoff<T>();
        EXPECT_LE(double(max_abs_diff(r.reconstruct(), a)), 64 * eps * double(a.max_abs())) << m << "x" << n;
        EXPECT_LE(isometry_defect_columns(r.u), 64 * eps) << m << "x" << n;
        EXPECT_LE(isometry_defect_rows(r.vdag), 64 * eps) << m << "x" << n;

        auto t = truncate_spectrum(r, std::max<std::size_t>(1, r.s.size() / 2), 0.0);
        EXPECT_LE(isometry_defect_columns(t.kept.u), 64 * eps);
        EXPECT_LE(isometry_defect_rows(t.kept.vdag), 64 * eps);
    }
}

TYPED_TEST(SvdProperty, truncation_weight_monotone_in_chi) {
    using T = TypeParam;
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 10; ++trial) {
        auto r = svd(test_support::random_matrix<T>(12, 9, rng));
        double previous = 2.0;
        for (std::size_t chi = 1; chi <= 10; ++chi) {
            auto t = truncate_spectrum(r, chi, 0.0);
            EXPECT_LE(t.discarded_weight, previous);
            previous = t.discarded_weight;
        }
        EXPECT_EQ(previous, 0.0);
    }
}

TEST(Svd, single_and_double_agree_on_singular_values) {
    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t m = 1 + trial % 16;
        const std::size_t n = 16 - trial % 7;
        auto af = test_support::random_matrix<float>(m, n, rng);
        auto rf = svd(af);
        auto rd = svd(af.cast<double>());
        ASSERT_EQ(rf.s.size(), rd.s.size());
        for (std::size_t i = 0; i < rd.s.size(); ++i) {
            EXPECT_LE(std::abs(double(rf.s[i]) - rd.s[i]), 1e-5 * rd.s[i]) << m << "x" << n << " index " << i;
        }
    }
}

TEST(TruncateSpectrum, exact_rank) {
    SvdResult<double> r{ComplexMatrix<double>::identity(2), {1.0, 0.0}, ComplexMatrix<double>::identity(2)};
    auto t = truncate_spectrum(r, 64, 1e-12);
    ASSERT_EQ(t.kept.s.size(), 1u);
    EXPECT_EQ(t.kept.s[0], 1.0);
    EXPECT_EQ(t.discarded_weight, 0.0);
    EXPECT_EQ(t.kept.u.cols(), 1u);
    EXPECT_EQ(t.kept.vdag.rows(), 1u);
    EXPECT_FALSE(t.degenerate_spectrum);
}

TEST(TruncateSpectrum, rejects_unsorted_and_bad_arguments) {
    SvdResult<double> r{ComplexMatrix<double>::identity(2), {3.0, 4.0}, ComplexMatrix<double>::identity(2)};
    EXPECT_THROW(truncate_spectrum(r, 64, 0.0), InvalidInput);
    r.s = {4.0, 3.0};
    EXPECT_THROW(truncate_spectrum(r, 0, 0.0), InvalidInput);
    EXPECT_THROW(truncate_spectrum(r, 2, 1.0), InvalidInput);
    EXPECT_THROW(truncate_spectrum(r, 2, -0.1), InvalidInput);
    r.s = {4.0, -1.0};
    EXPECT_THROW(truncate_spectrum(r, 2, 0.0), InvalidInput);
}

TEST(TruncateSpectrum, weight_formula) {
    SvdResult<double> r{ComplexMatrix<double>::identity(3), {2.0, 1.0, 1.0}, ComplexMatrix<double>::identity(3)};
    auto t = truncate_spectrum(r, 2, 1e-12);
    ASSERT_EQ(t.kept.s.size(), 2u);
    EXPECT_EQ(t.kept.s[0], 2.0);
    EXPECT_EQ(t.kept.s[1], 1.0);
    EXPECT_NEAR(t.discarded_weight, 1.0 / 6.0, 1e-15);
    EXPECT_NEAR(t.capped_weight, 1.0 / 6.0, 1e-15);
}

TEST(TruncateSpectrum, cutoff_drops_noise_without_cap_weight) {
    SvdResult<double> r{ComplexMatrix<double>::identity(3), {1.0, 1e-14, 0.0}, ComplexMatrix<double>::identity(3)};
    auto t = truncate_spectrum(r, 64, 1e-12);
    EXPECT_EQ(t.kept.s.size(), 1u);
    EXPECT_GT(t.discarded_weight, 0.0);
    EXPECT_EQ(t.capped_weight, 0.0);
}

TEST(TruncateSpectrum, all_zero_is_degenerate) {
    SvdResult<double> r{ComplexMatrix<double>::identity(2), {0.0, 0.0}, ComplexMatrix<double>::identity(2)};
    auto t = truncate_spectrum(r, 64, 1e-12);
    EXPECT_TRUE(t.degenerate_spectrum);
    EXPECT_EQ(t.kept.s.size(), 1u);
    EXPECT_EQ(t.discarded_weight, 0.0);
}

TEST(Svd, float_with_subnormal_column_converges) {
    // Captured from a single-precision Grover sweep; the last column sits at
    // ~1e-29 with subnormal entries.
    const float entries[16] = {0x1.fffff4p-1f,  -0x1.6ba074p-21f, 0x1.15f146p-23f, -0x1.a825e4p-96f,
                               -0x1.1fff74p-22f, 0x1.15ba02p-21f, 0x1.e3f462p-46f, -0x1.a8a018p-121f,
                               -0x1.39b6a4p-31f, -0x1.bb6774p-12f, -0x1.e08d8p-35f, 0x1.d28518p-108f,
                               -0x1.ffffc8p-13f, 0x1.bb677ap-12f, 0x1.953802p-36f, -0x1.52f7b6p-111f};
    numeric::ComplexMatrix<float> a(4, 4);
    for (std::size_t i = 0; i < 16; ++i) a.entries()[i] = entries[i];
    const auto r = numeric::svd(a);
    const double u = unit_roundoff<float>();
    EXPECT_LE(numeric::max_abs_diff(r.reconstruct(), a), 64 * u * a.max_abs());
    EXPECT_LE(r.u.unitarity_defect(), 64 * u);
    EXPECT_LE(r.vdag.unitarity_defect(), 64 * u);
    EXPECT_EQ(r.s[3], 0.0f);
}
