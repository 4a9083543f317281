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

#ifndef GROVER_MPS_STATEVECTOR_HPP
#define GROVER_MPS_STATEVECTOR_HPP

#include <cstdint>
#include <span>
#include <string_view>

#include "grover_mps/basis.hpp"
#include "grover_mps/complex_matrix.hpp"

namespace grover::sv {

inline constexpr int kDefaultMaxQubits = 32;

/// Dense 2^n amplitude vector. Basis index b holds the amplitude of the
/// bitstring whose character q equals bit (n-1-q) of b.
template <Real T>
class StateVector {
  public:
    /// |0…0⟩. Throws CapacityExceeded above max_qubits, with the memory the
    /// vector would need in the message.
    static StateVector zero(int n, int max_qubits = kDefaultMaxQubits);

    /// Takes ownership of explicit amplitudes; the length must be a power of two.
    static StateVector from_amplitudes(numeric::tracked_vector<Complex<T>> amps);

    int num_qubits() const noexcept { return n_; }
    static constexpr Precision precision() noexcept { return precision_of<T>(); }
    std::span<const Complex<T>> amplitudes() const noexcept { return amps_; }

    void apply_single_qubit(const numeric::ComplexMatrix<T> &gate, int qubit);
    /// 4×4 gate in the (q0, q1) basis with q0 as the high bit. Any pair of
    /// distinct qubits is accepted.
    void apply_two_qubit(const numeric::ComplexMatrix<T> &gate, int q0, int q1);
    /// I − 2|m⟩⟨m|: negates the marked amplitude.
    void apply_phase_flip(std::string_view marked);
    /// R_0 = 2|0⟩⟨0| − I: keeps amps[0], negates everything else.
    void apply_zero_reflection();

    Complex<T> amplitude_of(std::string_view basis) const;
    double norm_squared() const;

    /// Draws shots from |amps|² (renormalized). Deterministic for a seed.
    Histogram sample(std::uint64_t shots, std::uint64_t seed) const;

  private:
    StateVector(int n, numeric::tracked_vector<Complex<T>> amps) : n_(n), amps_(std::move(amps)) {}
    void check_qubit(int qubit) const;

    int n_ = 0;
    numeric::tracked_vector<Complex<T>> amps_;
};

/// Unit-roundoff based norm tolerance 1e3·u·2^(n/2).
double norm_tolerance(Precision p, int n);

}  // namespace grover::sv

#endif
