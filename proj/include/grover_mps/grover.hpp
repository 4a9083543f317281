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

#ifndef GROVER_MPS_GROVER_HPP
#define GROVER_MPS_GROVER_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "grover_mps/complex_matrix.hpp"
#include "grover_mps/mps.hpp"
#include "grover_mps/statevector.hpp"

namespace grover {

enum class KPolicy { RoundedQuarterPi, Optimal };
enum class Mode { Common, Iterative };
enum class Backend { Statevector, Mps };

const char *to_string(KPolicy p) noexcept;
const char *to_string(Mode m) noexcept;
const char *to_string(Backend b) noexcept;

struct GroverSpec {
    int n = 2;
    std::string marked = "11";
    KPolicy k_policy = KPolicy::RoundedQuarterPi;
    Mode mode = Mode::Iterative;
    Backend backend = Backend::Statevector;
    Precision precision = Precision::Double;
    std::size_t chi_max = mps::kDefaultChiMax;
    std::uint64_t seed = 0;
    /// Overrides the policy when set.
    std::optional<std::uint64_t> k_override;
    int max_statevector_qubits = sv::kDefaultMaxQubits;
};

/// Throws InvalidInput unless marked is an n-character bitstring and the
/// remaining fields are in range.
void validate(const GroverSpec &spec);

/// asin(2^(-n/2)).
double theta(int n);
std::uint64_t iteration_count(int n, KPolicy policy);
/// sin²((2k + 1)·θ(n)).
double predicted_success_probability(int n, std::uint64_t k);

template <Real T>
struct SingleQubitOp {
    numeric::ComplexMatrix<T> gate;
    int site = 0;
};

/// Gate on (site, site + 1), site as the high bit.
template <Real T>
struct TwoQubitAdjacentOp {
    numeric::ComplexMatrix<T> gate;
    int site = 0;
};

struct PhaseFlipMarkedOp {
    std::string marked;
};

struct ZeroReflectionOp {};

template <Real T>
using GateOp = std::variant<SingleQubitOp<T>, TwoQubitAdjacentOp<T>, PhaseFlipMarkedOp, ZeroReflectionOp>;

template <Real T>
struct GroverProgram {
    std::vector<GateOp<T>> ops;
    std::size_t prep_length = 0;
    std::size_t layer_length = 0;
    std::size_t layers_materialized = 0;
};

/// [PhaseFlipMarked, H on every site, ZeroReflection, H on every site].
template <Real T>
std::vector<GateOp<T>> build_grover_layer(const GroverSpec &spec);

/// H on every site.
template <Real T>
std::vector<GateOp<T>> build_preparation(int n);

/// Preparation plus `layers` copies of the Grover layer.
template <Real T>
GroverProgram<T> build_program(const GroverSpec &spec, std::uint64_t layers);

template <Real T>
void apply_op(sv::StateVector<T> &state, const GateOp<T> &op) {
    std::visit(
        [&](const auto &o) {
            using O = std::decay_t<decltype(o)>;
            if constexpr (std::is_same_v<O, SingleQubitOp<T>>) {
                state.apply_single_qubit(o.gate, o.site);
            } else if constexpr (std::is_same_v<O, TwoQubitAdjacentOp<T>>) {
                state.apply_two_qubit(o.gate, o.site, o.site + 1);
            } else if constexpr (std::is_same_v<O, PhaseFlipMarkedOp>) {
                state.apply_phase_flip(o.marked);
            } else {
                state.apply_zero_reflection();
            }
        },
        op);
}

template <Real T>
void apply_op(mps::MpsState<T> &state, const GateOp<T> &op) {
    std::visit(
        [&](const auto &o) {
            using O = std::decay_t<decltype(o)>;
            if constexpr (std::is_same_v<O, SingleQubitOp<T>>) {
                state.apply_single_qubit(o.gate, o.site);
            } else if constexpr (std::is_same_v<O, TwoQubitAdjacentOp<T>>) {
                state.apply_two_qubit(o.gate, o.site);
            } else if constexpr (std::is_same_v<O, PhaseFlipMarkedOp>) {
                state.apply_diagonal_mpo(mps::DiagonalMpo<T>::phase_flip(o.marked));
            } else {
                state.apply_diagonal_mpo(mps::DiagonalMpo<T>::zero_reflection(state.num_qubits()));
            }
        },
        op);
}

template <class State, Real T>
void execute(const std::vector<GateOp<T>> &ops, State &state) {
    for (const auto &op : ops) apply_op(state, op);
}

/// Backend state after a run.
using FinalState =
    std::variant<sv::StateVector<float>, sv::StateVector<double>, mps::MpsState<float>, mps::MpsState<double>>;

Histogram sample(const FinalState &state, std::uint64_t shots, std::uint64_t seed);
std::complex<double> amplitude_of(const FinalState &state, std::string_view basis);

/// Snapshot taken after each completed Grover layer.
struct StepInfo {
    std::uint64_t step = 0;
    std::size_t max_bond_dim = 0;  // 0 for the statevector backend
    double discarded_weight = 0;
};

using StepObserver = std::function<void(const StepInfo &)>;

struct GroverResult {
    std::uint64_t k = 0;
    std::complex<double> marked_amplitude;
    double marked_probability = 0;
    double wall_time_seconds = 0;
    std::size_t peak_program_ops = 0;
    std::size_t layers_materialized = 0;
    /// MPS only.
    std::optional<std::size_t> max_bond_dim;
    /// Weight dropped to the chi_max cap; 0 on the statevector backend.
    double discarded_weight = 0;
    /// Weight dropped as below-cutoff noise; 0 on the statevector backend.
    double cutoff_weight = 0;
    std::uint64_t renormalizations = 0;
    /// Peak tracked complex entries (state, program, scratch) during the run.
    std::size_t peak_entries = 0;
};

struct GroverRun {
    GroverResult result;
    FinalState state;
};

/// Runs the search and keeps the final state for sampling. The observer, if
/// set, fires after every Grover layer; its cost lands in wall_time.
GroverRun execute(const GroverSpec &spec, const StepObserver &observer = {});

GroverResult run(const GroverSpec &spec);

}  // namespace grover

#endif
