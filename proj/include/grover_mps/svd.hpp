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

#ifndef GROVER_MPS_SVD_HPP
#define GROVER_MPS_SVD_HPP

#include <cstddef>
#include <vector>

#include "grover_mps/complex_matrix.hpp"

namespace grover::numeric {

/// Thin SVD A = U · diag(s) · V†. With r = min(rows, cols): u is rows × r with
/// orthonormal columns, vdag is r × cols with orthonormal rows and s is sorted
/// non-increasing.
template <Real T>
struct SvdResult {
    ComplexMatrix<T> u;
    std::vector<T> s;
    ComplexMatrix<T> vdag;

    ComplexMatrix<T> reconstruct() const;
};

inline constexpr int kMaxJacobiSweeps = 100;

/// One-sided (Hestenes) Jacobi SVD. Columns of the working matrix are rotated
/// pairwise until every pair is orthogonal to working precision. Throws
/// InvalidInput on empty or non-finite input and NumericalFailure if the
/// sweep cap is reached.
template <Real T>
SvdResult<T> svd(const ComplexMatrix<T> &a);

template <Real T>
struct Truncation {
    SvdResult<T> kept;
    /// Σ_{i≥χ} s_i² / Σ_i s_i² over every dropped value.
    double discarded_weight = 0;
    /// Portion of discarded_weight from values above the relative cutoff that
    /// were dropped only because of chi_max.
    double capped_weight = 0;
    /// Set when every singular value is zero.
    bool degenerate_spectrum = false;
};

/// Keeps χ = min(chi_max, #{s_i > rel_cutoff · s_0}) values, at least one.
/// Ties at the boundary keep the earlier index.
template <Real T>
Truncation<T> truncate_spectrum(const SvdResult<T> &svd, std::size_t chi_max, double rel_cutoff);

}  // namespace grover::numeric

#endif
