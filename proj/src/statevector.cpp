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

#include "grover_mps/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "grover_mps/rng.hpp"

namespace grover::sv {

template <Real T>
StateVector<T> StateVector<T>::zero(int n, int max_qubits) {
    if (n < 1) throw InvalidInput("statevector: qubit count must be >= 1");
    if (n > max_qubits) {
        char need[32];
        std::snprintf(need, sizeof need, "%.3g", std::ldexp(double(sizeof(Complex<T>)), n - 30));
        throw CapacityExceeded("statevector of " + std::to_string(n) + " qubits exceeds the cap of " +
                               std::to_string(max_qubits) + " (would need " + need + " GiB)");
    }
    numeric::tracked_vector<Complex<T>> amps(std::size_t{1} << n);
    amps[0] = T(1);
    return StateVector(n, std::move(amps));
}

template <Real T>
StateVector<T> StateVector<T>::from_amplitudes(numeric::tracked_vector<Complex<T>> amps) {
    if (amps.size() < 2 || !std::has_single_bit(amps.size())) {
        throw InvalidInput("statevector: amplitude count must be a power of two >= 2");
    }
    const int n = std::countr_zero(amps.size());
    return StateVector(n, std::move(amps));
}

template <Real T>
void StateVector<T>::check_qubit(int qubit) const {
    if (qubit < 0 || qubit >= n_) {
        throw InvalidInput("qubit " + std::to_string(qubit) + " out of range for " + std::to_string(n_) + " qubits");
    }
}

template <Real T>
void StateVector<T>::apply_single_qubit(const numeric::ComplexMatrix<T> &gate, int qubit) {
    check_qubit(qubit);
    if (gate.rows() != 2 || gate.cols() != 2) throw InvalidGate("single-qubit gate must be 2x2");
    if (!gate.is_unitary()) throw InvalidGate("single-qubit gate is not unitary");
    const Complex<T> g00 = gate(0, 0), g01 = gate(0, 1), g10 = gate(1, 0), g11 = gate(1, 1);
    const std::size_t stride = std::size_t{1} << (n_ - 1 - qubit);
    const std::size_t dim = amps_.size();
    for (std::size_t block = 0; block < dim; block += 2 * stride) {
        for (std::size_t i = block; i < block + stride; ++i) {
            const Complex<T> a0 = amps_[i];
            const Complex<T> a1 = amps_[i + stride];
            amps_[i] = g00 * a0 + g01 * a1;
            amps_[i + stride] = g10 * a0 + g11 * a1;
        }
    }
}

template <Real T>
void StateVector<T>::apply_two_qubit(const numeric::ComplexMatrix<T> &gate, int q0, int q1) {
    check_qubit(q0);
    check_qubit(q1);
    if (q0 == q1) throw InvalidInput("two-qubit gate needs distinct qubits");
    if (gate.rows() != 4 || gate.cols() != 4) throw InvalidGate("two-qubit gate must be 4x4");
    if (!gate.is_unitary()) throw InvalidGate("two-qubit gate is not unitary");
    const std::size_t m0 = std::size_t{1} << (n_ - 1 - q0);
    const std::size_t m1 = std::size_t{1} << (n_ - 1 - q1);
    const std::size_t dim = amps_.size();
    Complex<T> in[4];
    for (std::size_t base = 0; base < dim; ++base) {
        if (base & (m0 | m1)) continue;
        const std::size_t idx[4] = {base, base | m1, base | m0, base | m0 | m1};
        for (int k = 0; k < 4; ++k) in[k] = amps_[idx[k]];
        for (int r = 0; r < 4; ++r) {
            Complex<T> acc = 0;
            for (int c = 0; c < 4; ++c) acc += gate(r, c) * in[c];
            amps_[idx[r]] = acc;
        }
    }
}

template <Real T>
void StateVector<T>::apply_phase_flip(std::string_view marked) {
    const auto index = basis_index(marked, n_);
    amps_[index] = -amps_[index];
}

template <Real T>
void StateVector<T>::apply_zero_reflection() {
    for (std::size_t i = 1; i < amps_.size(); ++i) amps_[i] = -amps_[i];
}

template <Real T>
Complex<T> StateVector<T>::amplitude_of(std::string_view basis) const {
    return amps_[basis_index(basis, n_)];
}

template <Real T>
double StateVector<T>::norm_squared() const {
    double acc = 0;
    for (const auto &a : amps_) acc += double(std::norm(a));
    return acc;
}

template <Real T>
Histogram StateVector<T>::sample(std::uint64_t shots, std::uint64_t seed) const {
    if (shots < 1) throw InvalidInput("sample: shots must be >= 1");
    std::vector<double> cumulative(amps_.size());
    double total = 0;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        total += double(std::norm(amps_[i]));
        cumulative[i] = total;
    }
    if (!(total > 0)) throw NumericalFailure("sample: state has zero norm");
    Rng rng(seed);
    std::vector<std::uint64_t> counts(amps_.size(), 0);
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double r = uniform01(rng) * total;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), r);
        if (it == cumulative.end()) --it;
        ++counts[static_cast<std::size_t>(it - cumulative.begin())];
    }
    Histogram out;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] != 0) out.emplace(basis_string(i, n_), counts[i]);
    }
    return out;
}

double norm_tolerance(Precision p, int n) { return 1e3 * unit_roundoff(p) * std::pow(2.0, 0.5 * n); }

template class StateVector<float>;
template class StateVector<double>;

}  // namespace grover::sv
