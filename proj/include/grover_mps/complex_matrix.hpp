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

#ifndef GROVER_MPS_COMPLEX_MATRIX_HPP
#define GROVER_MPS_COMPLEX_MATRIX_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <span>

#include "grover_mps/allocation.hpp"
#include "grover_mps/error.hpp"
#include "grover_mps/precision.hpp"

namespace grover::numeric {

/// Dense complex matrix, row-major, std::complex entries (so each entry is
/// stored as interleaved real/imaginary parts).
template <Real T>
class ComplexMatrix {
  public:
    using scalar_type = Complex<T>;

    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    ComplexMatrix(std::size_t rows, std::size_t cols, std::initializer_list<scalar_type> values)
        : rows_(rows), cols_(cols), data_(values.begin(), values.end()) {
        if (data_.size() != rows * cols) {
            throw InvalidInput("ComplexMatrix: entry count does not match rows x cols");
        }
    }

    /// Adopts row-major storage, e.g. a site tensor viewed as a matrix.
    ComplexMatrix(std::size_t rows, std::size_t cols, tracked_vector<scalar_type> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows * cols) {
            throw InvalidInput("ComplexMatrix: entry count does not match rows x cols");
        }
    }

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    static constexpr Precision precision() noexcept { return precision_of<T>(); }

    scalar_type &operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    const scalar_type &operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

    std::span<scalar_type> entries() noexcept { return data_; }
    std::span<const scalar_type> entries() const noexcept { return data_; }

    tracked_vector<scalar_type> release() && { return std::move(data_); }

    bool all_finite() const noexcept {
        return std::all_of(data_.begin(), data_.end(),
                           [](const scalar_type &z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
    }

    T max_abs() const noexcept {
        T m = 0;
        for (const auto &z : data_) m = std::max(m, std::abs(z));
        return m;
    }

    ComplexMatrix adjoint() const {
        ComplexMatrix out(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
        return out;
    }

    /// ‖M†M − I‖_max, evaluated in double so the check itself adds no
    /// single-precision rounding.
    double unitarity_defect() const {
        if (rows_ != cols_) return std::numeric_limits<double>::infinity();
        double worst = 0;
        for (std::size_t i = 0; i < cols_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                std::complex<double> acc = 0;
                for (std::size_t k = 0; k < rows_; ++k) {
                    acc += std::conj(std::complex<double>((*this)(k, i))) * std::complex<double>((*this)(k, j));
                }
                if (i == j) acc -= 1.0;
                worst = std::max(worst, std::abs(acc));
            }
        }
        return worst;
    }

    bool is_unitary() const { return unitarity_defect() <= 8.0 * unit_roundoff<T>(); }

    template <Real U>
    ComplexMatrix<U> cast() const {
        ComplexMatrix<U> out(rows_, cols_);
        auto dst = out.entries();
        for (std::size_t i = 0; i < data_.size(); ++i) dst[i] = Complex<U>(data_[i]);
        return out;
    }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    tracked_vector<scalar_type> data_;
};

template <Real T>
ComplexMatrix<T> matmul(const ComplexMatrix<T> &a, const ComplexMatrix<T> &b) {
    if (a.cols() != b.rows()) throw InvalidInput("matmul: inner dimensions differ");
    ComplexMatrix<T> out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const auto aik = a(i, k);
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

template <Real T>
T max_abs_diff(const ComplexMatrix<T> &a, const ComplexMatrix<T> &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidInput("max_abs_diff: shape mismatch");
    T m = 0;
    auto x = a.entries();
    auto y = b.entries();
    for (std::size_t i = 0; i < x.size(); ++i) m = std::max(m, std::abs(x[i] - y[i]));
    return m;
}

}  // namespace grover::numeric

#endif
