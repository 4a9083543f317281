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

// Test-only helpers: random matrices, Gram-Schmidt unitaries and a tiny dense
// reference for Grover evolution that shares no code with the library.

#ifndef GROVER_MPS_TESTS_TEST_UTIL_HPP
#define GROVER_MPS_TESTS_TEST_UTIL_HPP

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "grover_mps/complex_matrix.hpp"

namespace grover::test_support {

template <Real T>
numeric::ComplexMatrix<T> random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64 &rng) {
    std::normal_distribution<double> dist(0.0, 1.0);
    numeric::ComplexMatrix<T> m(rows, cols);
    for (auto &z : m.entries()) z = Complex<T>(T(dist(rng)), T(dist(rng)));
    return m;
}

/// Haar-ish random unitary via modified Gram-Schmidt on Gaussian columns,
/// computed in double and rounded to T.
template <Real T>
numeric::ComplexMatrix<T> random_unitary(std::size_t dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> dist(0.0, 1.0);
    std::vector<std::vector<std::complex<double>>> cols(dim, std::vector<std::complex<double>>(dim));
    for (auto &c : cols)
        for (auto &z : c) z = {dist(rng), dist(rng)};
    for (std::size_t j = 0; j < dim; ++j) {
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t k = 0; k < j; ++k) {
                std::complex<double> proj = 0;
                for (std::size_t i = 0; i < dim; ++i) proj += std::conj(cols[k][i]) * cols[j][i];
                for (std::size_t i = 0; i < dim; ++i) cols[j][i] -= proj * cols[k][i];
            }
        }
        double norm = 0;
        for (auto &z : cols[j]) norm += std::norm(z);
        norm = std::sqrt(norm);
        for (auto &z : cols[j]) z /= norm;
    }
    numeric::ComplexMatrix<T> u(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) u(i, j) = Complex<T>(cols[j][i]);
    return u;
}

/// sin²((2k+1)·asin(2^{-n/2})), written out directly.
inline double closed_form_probability(int n, long k) {
    const double theta = std::asin(std::pow(2.0, -0.5 * n));
    const double s = std::sin((2.0 * double(k) + 1.0) * theta);
    return s * s;
}

/// Brute-force Grover: G = (2|s><s| − I)(I − 2|w><w|) as an explicit N×N
/// matrix applied k times to |s>. Returns |<w|G^k|s>|².
inline double brute_force_grover_probability(int n, std::size_t marked, long k) {
    const std::size_t dim = std::size_t{1} << n;
    std::vector<double> g(dim * dim);
    const double inv = 1.0 / double(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            const double d = 2.0 * inv - (i == j ? 1.0 : 0.0);
            g[i * dim + j] = d * (j == marked ? -1.0 : 1.0);
        }
    std::vector<double> v(dim, std::sqrt(inv));
    std::vector<double> next(dim);
    for (long step = 0; step < k; ++step) {
        for (std::size_t i = 0; i < dim; ++i) {
            double acc = 0;
            for (std::size_t j = 0; j < dim; ++j) acc += g[i * dim + j] * v[j];
            next[i] = acc;
        }
        v.swap(next);
    }
    return v[marked] * v[marked];
}

}  // namespace grover::test_support

#endif
