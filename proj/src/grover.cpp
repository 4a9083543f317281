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

#include "grover_mps/grover.hpp"

#include <chrono>
#include <cmath>
#include <numbers>

#include "grover_mps/allocation.hpp"
#include "grover_mps/gates.hpp"

namespace grover {

const char *to_string(KPolicy p) noexcept { return p == KPolicy::RoundedQuarterPi ? "paper" : "optimal"; }
const char *to_string(Mode m) noexcept { return m == Mode::Common ? "common" : "iterative"; }
const char *to_string(Backend b) noexcept { return b == Backend::Statevector ? "sv" : "mps"; }

void validate(const GroverSpec &spec) {
    if (spec.n < 1) throw InvalidInput("grover: n must be >= 1");
    if (spec.marked.size() != std::size_t(spec.n)) {
        throw InvalidInput("grover: marked bitstring has length " + std::to_string(spec.marked.size()) + ", expected " +
                           std::to_string(spec.n));
    }
    for (char c : spec.marked) {
        if (c != '0' && c != '1') throw InvalidInput("grover: marked bitstring must contain only 0 and 1");
    }
    if (spec.chi_max < 1) throw InvalidInput("grover: chi_max must be >= 1");
}

double theta(int n) {
    if (n < 1) throw InvalidInput("theta: n must be >= 1");
    return std::asin(std::pow(2.0, -0.5 * n));
}

std::uint64_t iteration_count(int n, KPolicy policy) {
    if (n < 1) throw InvalidInput("iteration_count: n must be >= 1");
    if (policy == KPolicy::RoundedQuarterPi) {
        return std::uint64_t(std::llround(std::numbers::pi / 4 * std::sqrt(std::ldexp(1.0, n))));
    }
    const long long k = std::llround(std::numbers::pi / (4 * theta(n)) - 0.5);
    return std::uint64_t(std::max(1LL, k));
}

double predicted_success_probability(int n, std::uint64_t k) {
    const double s = std::sin(double(2 * k + 1) * theta(n));
    return s * s;
}

template <Real T>
std::vector<GateOp<T>> build_preparation(int n) {
    std::vector<GateOp<T>> ops;
    ops.reserve(std::size_t(n));
    for (int q = 0; q < n; ++q) ops.emplace_back(SingleQubitOp<T>{gates::hadamard<T>(), q});
    return ops;
}

template <Real T>
std::vector<GateOp<T>> build_grover_layer(const GroverSpec &spec) {
    validate(spec);
    std::vector<GateOp<T>> ops;
    ops.reserve(2 * std::size_t(spec.n) + 2);
    ops.emplace_back(PhaseFlipMarkedOp{spec.marked});
    for (int q = 0; q < spec.n; ++q) ops.emplace_back(SingleQubitOp<T>{gates::hadamard<T>(), q});
    ops.emplace_back(ZeroReflectionOp{});
    for (int q = 0; q < spec.n; ++q) ops.emplace_back(SingleQubitOp<T>{gates::hadamard<T>(), q});
    return ops;
}

template <Real T>
GroverProgram<T> build_program(const GroverSpec &spec, std::uint64_t layers) {
    GroverProgram<T> program;
    program.ops = build_preparation<T>(spec.n);
    program.prep_length = program.ops.size();
    const auto layer = build_grover_layer<T>(spec);
    program.layer_length = layer.size();
    program.ops.reserve(program.prep_length + layers * layer.size());
    // Each layer gets its own gate objects, as a materialized circuit would.
    for (std::uint64_t i = 0; i < layers; ++i) {
        const auto copy = build_grover_layer<T>(spec);
        program.ops.insert(program.ops.end(), copy.begin(), copy.end());
    }
    program.layers_materialized = std::size_t(layers);
    return program;
}

namespace {

template <Real T>
StepInfo step_info(const sv::StateVector<T> &, std::uint64_t step) {
    return StepInfo{step, 0, 0.0};
}

template <Real T>
StepInfo step_info(const mps::MpsState<T> &s, std::uint64_t step) {
    return StepInfo{step, s.max_bond_dim(), s.cumulative_discarded_weight()};
}

template <Real T>
void fill_backend_stats(const sv::StateVector<T> &, GroverResult &) {}

template <Real T>
void fill_backend_stats(const mps::MpsState<T> &s, GroverResult &r) {
    r.max_bond_dim = s.max_bond_dim();
    r.discarded_weight = s.cumulative_discarded_weight();
    r.cutoff_weight = s.cumulative_cutoff_weight();
    r.renormalizations = s.renormalization_count();
}

template <Real T, class MakeState>
GroverRun run_with(const GroverSpec &spec, std::uint64_t k, MakeState make_state, const StepObserver &observer) {
    using Clock = std::chrono::steady_clock;
    GroverResult result;
    result.k = k;
    numeric::PeakProbe probe;
    const auto start = Clock::now();

    auto state = make_state();
    std::size_t max_bond = 0;
    auto notify = [&](std::uint64_t step) {
        if constexpr (std::is_same_v<decltype(state), mps::MpsState<T>>) max_bond = std::max(max_bond, state.max_bond_dim());
        if (observer) observer(step_info(state, step));
    };

    if (spec.mode == Mode::Common) {
        const auto program = build_program<T>(spec, k);
        result.peak_program_ops = program.ops.size();
        result.layers_materialized = program.layers_materialized;
        auto it = program.ops.begin();
        for (std::size_t i = 0; i < program.prep_length; ++i) apply_op(state, *it++);
        for (std::uint64_t step = 1; step <= k; ++step) {
            for (std::size_t i = 0; i < program.layer_length; ++i) apply_op(state, *it++);
            notify(step);
        }
    } else {
        const auto prep = build_preparation<T>(spec.n);
        const auto layer = build_grover_layer<T>(spec);
        result.peak_program_ops = prep.size() + layer.size();
        result.layers_materialized = 1;
        execute(prep, state);
        for (std::uint64_t step = 1; step <= k; ++step) {
            execute(layer, state);
            notify(step);
        }
    }

    result.marked_amplitude = std::complex<double>(state.amplitude_of(spec.marked));
    result.wall_time_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    result.marked_probability = std::norm(result.marked_amplitude);
    result.peak_entries = probe.peak_entries() - probe.baseline_entries();
    fill_backend_stats(state, result);
    if (result.max_bond_dim) result.max_bond_dim = std::max(*result.max_bond_dim, max_bond);
    return GroverRun{result, FinalState(std::move(state))};
}

template <Real T>
GroverRun run_typed(const GroverSpec &spec, std::uint64_t k, const StepObserver &observer) {
    if (spec.backend == Backend::Statevector) {
        return run_with<T>(
            spec, k, [&] { return sv::StateVector<T>::zero(spec.n, spec.max_statevector_qubits); }, observer);
    }
    return run_with<T>(
        spec, k,
        [&] {
            auto s = mps::MpsState<T>::zero(spec.n, spec.chi_max);
            s.set_renormalize(true);
            return s;
        },
        observer);
}

}  // namespace

GroverRun execute(const GroverSpec &spec, const StepObserver &observer) {
    validate(spec);
    const std::uint64_t k = spec.k_override ? *spec.k_override : iteration_count(spec.n, spec.k_policy);
    if (spec.precision == Precision::Single) return run_typed<float>(spec, k, observer);
    return run_typed<double>(spec, k, observer);
}

GroverResult run(const GroverSpec &spec) { return execute(spec).result; }

Histogram sample(const FinalState &state, std::uint64_t shots, std::uint64_t seed) {
    return std::visit([&](const auto &s) { return s.sample(shots, seed); }, state);
}

std::complex<double> amplitude_of(const FinalState &state, std::string_view basis) {
    return std::visit([&](const auto &s) { return std::complex<double>(s.amplitude_of(basis)); }, state);
}

template std::vector<GateOp<float>> build_preparation<float>(int);
template std::vector<GateOp<double>> build_preparation<double>(int);
template std::vector<GateOp<float>> build_grover_layer<float>(const GroverSpec &);
template std::vector<GateOp<double>> build_grover_layer<double>(const GroverSpec &);
template GroverProgram<float> build_program<float>(const GroverSpec &, std::uint64_t);
template GroverProgram<double> build_program<double>(const GroverSpec &, std::uint64_t);

}  // namespace grover
