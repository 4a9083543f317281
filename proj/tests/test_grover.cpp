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

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "test_util.hpp"

using namespace grover;

namespace {

GroverSpec make_spec(int n, Backend backend, Mode mode, Precision precision = Precision::Double) {
    GroverSpec spec;
    spec.n = n;
    spec.marked = std::string(std::size_t(n), '1');
    spec.backend = backend;
    spec.mode = mode;
    spec.precision = precision;
    return spec;
}

constexpr Backend kBackends[] = {Backend::Statevector, Backend::Mps};
constexpr Mode kModes[] = {Mode::Common, Mode::Iterative};

}  // namespace

TEST(Grover, theta) {
    EXPECT_NEAR(theta(2), std::numbers::pi / 6, 1e-15);
    EXPECT_NEAR(theta(3), 0.36136712390670783, 1e-15);
    for (int n = 10; n <= 40; ++n) EXPECT_NEAR(theta(n) / std::pow(2.0, -0.5 * n), 1.0, 0.01);
    EXPECT_THROW(theta(0), InvalidInput);
}

TEST(Grover, iteration_count) {
    EXPECT_EQ(iteration_count(4, KPolicy::RoundedQuarterPi), 3u);
    EXPECT_EQ(iteration_count(2, KPolicy::RoundedQuarterPi), 2u);
    EXPECT_EQ(iteration_count(2, KPolicy::Optimal), 1u);
    EXPECT_EQ(iteration_count(10, KPolicy::RoundedQuarterPi), 25u);
    EXPECT_EQ(iteration_count(20, KPolicy::RoundedQuarterPi), 804u);
    EXPECT_EQ(iteration_count(24, KPolicy::RoundedQuarterPi), 3217u);
    EXPECT_EQ(iteration_count(14, KPolicy::Optimal), 100u);
    EXPECT_EQ(iteration_count(24, KPolicy::Optimal), 3216u);
    EXPECT_EQ(iteration_count(1, KPolicy::Optimal), 1u);
}

TEST(Grover, predicted_success_probability) {
    EXPECT_NEAR(predicted_success_probability(2, 1), 1.0, 1e-15);
    EXPECT_NEAR(predicted_success_probability(3, 2), 0.9453125, 1e-12);
    EXPECT_NEAR(predicted_success_probability(3, 2), test_support::brute_force_grover_probability(3, 2, 2), 1e-12);
    EXPECT_NEAR(predicted_success_probability(5, 4), 0.9991823155432941, 1e-12);
    for (int n = 1; n <= 20; ++n) EXPECT_NEAR(predicted_success_probability(n, 0), std::ldexp(1.0, -n), 1e-15);
}

TEST(Grover, validate) {
    auto spec = make_spec(3, Backend::Statevector, Mode::Common);
    EXPECT_NO_THROW(validate(spec));
    spec.marked = "11";
    EXPECT_THROW(validate(spec), InvalidInput);
    spec.marked = "1a1";
    EXPECT_THROW(validate(spec), InvalidInput);
    spec.marked = "111";
    spec.chi_max = 0;
    EXPECT_THROW(validate(spec), InvalidInput);
    EXPECT_THROW(run(spec), InvalidInput);
}

TEST(Grover, layer_shape) {
    for (int n = 1; n <= 9; ++n) {
        const auto layer = build_grover_layer<double>(make_spec(n, Backend::Statevector, Mode::Common));
        ASSERT_EQ(layer.size(), std::size_t(2 * n + 2));
        EXPECT_TRUE(std::holds_alternative<PhaseFlipMarkedOp>(layer.front()));
        EXPECT_TRUE(std::holds_alternative<ZeroReflectionOp>(layer[std::size_t(n) + 1]));
        for (int q = 0; q < n; ++q) {
            EXPECT_EQ(std::get<SingleQubitOp<double>>(layer[std::size_t(q) + 1]).site, q);
            EXPECT_EQ(std::get<SingleQubitOp<double>>(layer[std::size_t(n + q) + 2]).site, q);
        }
    }
}

TEST(Grover, layer_advances_one_step) {
    for (Backend backend : kBackends) {
        auto spec = make_spec(3, backend, Mode::Iterative);
        spec.marked = "010";
        spec.k_override = 1;
        EXPECT_NEAR(run(spec).marked_probability, 0.78125, 1e-12);
        spec.k_override = 2;
        EXPECT_NEAR(run(spec).marked_probability, 0.9453125, 1e-12);
    }
}

TEST(Grover, program_size) {
    const auto spec = make_spec(6, Backend::Statevector, Mode::Common);
    const auto program = build_program<double>(spec, 7);
    EXPECT_EQ(program.prep_length, 6u);
    EXPECT_EQ(program.layer_length, 14u);
    EXPECT_EQ(program.layers_materialized, 7u);
    EXPECT_EQ(program.ops.size(), 6u + 7u * 14u);
    EXPECT_EQ(build_program<double>(spec, 0).ops.size(), 6u);
}

TEST(Grover, exact_case_n2) {
    for (Backend backend : kBackends)
        for (Mode mode : kModes) {
            auto spec = make_spec(2, backend, mode);
            spec.k_policy = KPolicy::Optimal;
            const auto r = run(spec);
            EXPECT_EQ(r.k, 1u);
            EXPECT_NEAR(r.marked_probability, 1.0, 1e-12) << to_string(backend) << to_string(mode);
        }
    // round(π/4·√N) overshoots at n = 2.
    EXPECT_NEAR(run(make_spec(2, Backend::Statevector, Mode::Iterative)).marked_probability, 0.25, 1e-12);
}

TEST(Grover, cross_backend_n5) {
    const auto a = run(make_spec(5, Backend::Statevector, Mode::Iterative));
    const auto b = run(make_spec(5, Backend::Mps, Mode::Iterative));
    EXPECT_EQ(a.k, 4u);
    EXPECT_NEAR(a.marked_probability, 0.9991823155432941, 1e-9);
    EXPECT_NEAR(b.marked_probability, 0.9991823155432941, 1e-9);
    EXPECT_NEAR(a.marked_probability, b.marked_probability, 1e-10);
}

TEST(Grover, modes_agree_n8) {
    for (Backend backend : kBackends) {
        const auto c = run(make_spec(8, backend, Mode::Common));
        const auto i = run(make_spec(8, backend, Mode::Iterative));
        EXPECT_LE(std::abs(c.marked_amplitude - i.marked_amplitude), 1e-12);
        EXPECT_EQ(c.peak_program_ops, c.k * 18 + 8);
        EXPECT_EQ(i.peak_program_ops, 18u + 8u);
        EXPECT_EQ(c.layers_materialized, c.k);
        EXPECT_EQ(i.layers_materialized, 1u);
        const double ratio = double(c.peak_program_ops) / double(i.peak_program_ops);
        EXPECT_GE(ratio, double(c.k) * 18 / (18 + 8));
        EXPECT_LE(ratio, double(c.k));
    }
}

TEST(Grover, closed_form_property) {
    for (int n = 2; n <= 12; ++n)
        for (Backend backend : kBackends)
            for (KPolicy policy : {KPolicy::RoundedQuarterPi, KPolicy::Optimal}) {
                auto spec = make_spec(n, backend, Mode::Iterative);
                spec.k_policy = policy;
                // Vary the marked item to exercise more than the all-ones oracle.
                spec.marked = basis_string((std::uint64_t{2654435761u} * std::uint64_t(n)) % (std::uint64_t{1} << n), n);
                const auto r = run(spec);
                EXPECT_NEAR(r.marked_probability, predicted_success_probability(n, r.k), 1e-9)
                    << "n=" << n << " backend=" << to_string(backend);
            }
}

TEST(Grover, mode_equivalence_property) {
    for (int n = 2; n <= 10; ++n)
        for (Backend backend : kBackends)
            for (Precision p : {Precision::Single, Precision::Double}) {
                const auto c = run(make_spec(n, backend, Mode::Common, p));
                const auto i = run(make_spec(n, backend, Mode::Iterative, p));
                EXPECT_NEAR(c.marked_probability, i.marked_probability, p == Precision::Double ? 1e-12 : 1e-5) << n;
            }
}

TEST(Grover, monotone_below_optimum) {
    for (int n = 3; n <= 10; ++n) {
        const auto k_opt = iteration_count(n, KPolicy::Optimal);
        double prev = -1;
        for (std::uint64_t k = 0; k <= k_opt; ++k) {
            auto spec = make_spec(n, Backend::Mps, Mode::Iterative);
            spec.k_override = k;
            const double p = run(spec).marked_probability;
            EXPECT_GT(p, prev) << "n=" << n << " k=" << k;
            prev = p;
        }
    }
}

TEST(Grover, mps_bond_dimension_stays_two) {
    for (int n = 4; n <= 12; ++n) {
        std::size_t worst = 0;
        double discarded = 0;
        auto spec = make_spec(n, Backend::Mps, Mode::Iterative);
        spec.marked = basis_string(std::uint64_t(n * 37) % (std::uint64_t{1} << n), n);
        const auto r = execute(spec, [&](const StepInfo &s) {
            worst = std::max(worst, s.max_bond_dim);
            discarded = std::max(discarded, s.discarded_weight);
        });
        EXPECT_LE(worst, 2u) << n;
        EXPECT_EQ(discarded, 0.0) << n;
        EXPECT_EQ(*r.result.max_bond_dim, worst);
    }
}

TEST(Grover, observer_sees_every_step) {
    for (Mode mode : kModes) {
        std::vector<std::uint64_t> steps;
        auto spec = make_spec(6, Backend::Statevector, mode);
        execute(spec, [&](const StepInfo &s) { steps.push_back(s.step); });
        ASSERT_EQ(steps.size(), iteration_count(6, KPolicy::RoundedQuarterPi));
        for (std::size_t i = 0; i < steps.size(); ++i) EXPECT_EQ(steps[i], i + 1);
    }
}

TEST(Grover, final_state_sampling) {
    for (Backend backend : kBackends) {
        const auto out = execute(make_spec(7, backend, Mode::Iterative));
        EXPECT_NEAR(std::abs(amplitude_of(out.state, "1111111") - out.result.marked_amplitude), 0.0, 1e-15);
        const auto h = sample(out.state, 512, 3);
        EXPECT_EQ(h, sample(out.state, 512, 3));
        const double p = out.result.marked_probability;
        const double hits = h.count("1111111") ? double(h.at("1111111")) : 0;
        EXPECT_LE(std::abs(hits / 512 - p), 4 * std::sqrt(p * (1 - p) / 512) + 1e-12);
    }
}

TEST(Grover, capacity_exceeded) {
    auto spec = make_spec(12, Backend::Statevector, Mode::Iterative);
    spec.max_statevector_qubits = 10;
    EXPECT_THROW(run(spec), CapacityExceeded);
}

TEST(Grover, single_precision_close_to_double) {
    for (Backend backend : kBackends) {
        const auto d = run(make_spec(10, backend, Mode::Iterative, Precision::Double));
        const auto s = run(make_spec(10, backend, Mode::Iterative, Precision::Single));
        EXPECT_NEAR(std::abs(s.marked_amplitude), std::abs(d.marked_amplitude), 1e-3);
    }
}
