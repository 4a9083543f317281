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

#ifndef GROVER_MPS_GATES_HPP
#define GROVER_MPS_GATES_HPP

#include <cmath>

#include "grover_mps/complex_matrix.hpp"

namespace grover::gates {

template <Real T>
numeric::ComplexMatrix<T> hadamard() {
    const T h = T(1) / std::sqrt(T(2));
    return numeric::ComplexMatrix<T>(2, 2, {h, h, h, -h});
}

template <Real T>
numeric::ComplexMatrix<T> pauli_x() {
    return numeric::ComplexMatrix<T>(2, 2, {0, 1, 1, 0});
}

template <Real T>
numeric::ComplexMatrix<T> pauli_z() {
    return numeric::ComplexMatrix<T>(2, 2, {1, 0, 0, -1});
}

template <Real T>
numeric::ComplexMatrix<T> cz() {
    auto m = numeric::ComplexMatrix<T>::identity(4);
    m(3, 3) = T(-1);
    return m;
}

template <Real T>
numeric::ComplexMatrix<T> swap() {
    numeric::ComplexMatrix<T> m(4, 4);
    m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = T(1);
    return m;
}

/// SWAP·G·SWAP: the same two-qubit gate with its qubit roles exchanged.
template <Real T>
numeric::ComplexMatrix<T> reverse_qubits(const numeric::ComplexMatrix<T> &g) {
    constexpr int perm[4] = {0, 2, 1, 3};
    numeric::ComplexMatrix<T> out(4, 4);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out(perm[r], perm[c]) = g(r, c);
    return out;
}

}  // namespace grover::gates

#endif
