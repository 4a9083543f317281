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

#ifndef GROVER_MPS_BENCH_HPP
#define GROVER_MPS_BENCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grover_mps/grover.hpp"

namespace grover::bench {

enum class Experiment { Runtime, Amplitude, Shots };
enum class MarkedPolicy { AllOnes, Random };

const char *to_string(Experiment e) noexcept;
const char *to_string(MarkedPolicy m) noexcept;

/// Parsers for the CLI spellings (runtime, sv, common, f32, paper, ones, ...).
/// Throw InvalidInput on unknown names.
Experiment parse_experiment(std::string_view s);
Backend parse_backend(std::string_view s);
Mode parse_mode(std::string_view s);
Precision parse_precision(std::string_view s);
KPolicy parse_k_policy(std::string_view s);
MarkedPolicy parse_marked_policy(std::string_view s);

struct BenchConfig {
    Experiment experiment = Experiment::Runtime;
    int n_min = 2;
    int n_max = 10;
    std::vector<Backend> backends{Backend::Statevector, Backend::Mps};
    std::vector<Mode> modes{Mode::Common, Mode::Iterative};
    std::vector<Precision> precisions{Precision::Double};
    std::vector<std::uint64_t> shots_list{1, 8, 64, 512, 4096};
    std::uint64_t trials = 10;
    std::size_t chi_max = mps::kDefaultChiMax;
    KPolicy k_policy = KPolicy::RoundedQuarterPi;
    std::uint64_t seed = 0;
    std::string output_path;
    MarkedPolicy marked_policy = MarkedPolicy::AllOnes;
    unsigned jobs = 1;
    int max_statevector_qubits = sv::kDefaultMaxQubits;
};

/// Throws InvalidInput on an unusable configuration.
void validate(const BenchConfig &config);

/// Marked bitstring used at n; Random draws from a stream keyed by (seed, n).
std::string marked_for(const BenchConfig &config, int n);

struct BenchRecord {
    Experiment experiment = Experiment::Runtime;
    int n = 0;
    Backend backend = Backend::Statevector;
    Mode mode = Mode::Common;
    Precision precision = Precision::Double;
    std::uint64_t k = 0;
    std::uint64_t shots = 0;
    std::uint64_t trial = 0;
    double wall_time_seconds = 0;
    double marked_amplitude_exact = 0;
    /// √(marked_count / shots); NaN when shots = 0.
    double marked_amplitude_sampled = 0;
    std::optional<std::uint64_t> peak_program_ops;
    /// Empty on the statevector backend and on skipped rows.
    std::optional<std::uint64_t> max_bond_dim;
    double discarded_weight = 0;
    KPolicy k_policy = KPolicy::RoundedQuarterPi;
    bool skipped = false;

    bool operator==(const BenchRecord &) const = default;
};

struct Skip {
    std::string point;
    std::string reason;
};

struct SweepResult {
    std::vector<BenchRecord> records;
    std::vector<Skip> skips;
};

SweepResult run_runtime_sweep(const BenchConfig &config);
SweepResult run_amplitude_sweep(const BenchConfig &config);
SweepResult run_shot_sweep(const BenchConfig &config);
/// Dispatches on config.experiment.
SweepResult run_sweep(const BenchConfig &config);

/// Number of rows a sweep emits, skipped rows included.
std::uint64_t lattice_size(const BenchConfig &config);

std::string csv_header();
std::string to_csv(const std::vector<BenchRecord> &records);
/// Writes to_csv(records) to path; I/O failures throw Error naming the path.
void emit_csv(const std::vector<BenchRecord> &records, const std::string &path);
/// Inverse of to_csv. Throws InvalidInput on malformed text.
std::vector<BenchRecord> parse_csv(std::string_view text);

}  // namespace grover::bench

#endif
