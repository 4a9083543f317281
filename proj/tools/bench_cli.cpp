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

// Sweep driver: runs one experiment over a lattice of (n, backend, mode,
// precision) points and writes a CSV. Exit codes: 0 full sweep, 2 some points
// skipped, 1 bad configuration or I/O failure.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "grover_mps/bench.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitPartial = 2;

template <class T, class Parse>
std::vector<T> parse_list(const std::vector<std::string> &names, Parse parse) {
    std::vector<T> out;
    for (const auto &name : names) out.push_back(parse(name));
    return out;
}

}  // namespace

int main(int argc, char **argv) {
    using namespace grover;
    using namespace grover::bench;

    CLI::App app{"Grover search sweeps over statevector and MPS backends"};
    app.option_defaults()->always_capture_default();

    std::string experiment = "runtime";
    int n_min = 2;
    int n_max = 10;
    std::vector<std::string> backends{"sv", "mps"};
    std::vector<std::string> modes{"common", "iterative"};
    std::vector<std::string> precisions{"f64"};
    std::vector<std::uint64_t> shots{1, 8, 64, 512, 4096};
    std::uint64_t trials = 10;
    std::size_t chi_max = mps::kDefaultChiMax;
    std::string k_policy = "paper";
    std::string marked = "ones";
    std::uint64_t seed = 0;
    std::string out_path;
    unsigned jobs = 1;
    int sv_max_qubits = sv::kDefaultMaxQubits;

    app.add_option("--experiment", experiment, "runtime | amplitude | shots")
        ->check(CLI::IsMember({"runtime", "amplitude", "shots"}));
    app.add_option("--n-min", n_min, "Smallest qubit count")->check(CLI::Range(1, 64));
    app.add_option("--n-max", n_max, "Largest qubit count")->check(CLI::Range(1, 64));
    app.add_option("--backends", backends, "Comma-separated subset of sv,mps")->delimiter(',');
    app.add_option("--modes", modes, "Comma-separated subset of common,iterative")->delimiter(',');
    app.add_option("--precisions", precisions, "Comma-separated subset of f32,f64")->delimiter(',');
    app.add_option("--shots", shots, "Shot counts for the shots experiment")->delimiter(',');
    app.add_option("--trials", trials, "Trials per sweep point")->check(CLI::PositiveNumber);
    app.add_option("--chi-max", chi_max, "MPS bond-dimension cap")->check(CLI::PositiveNumber);
    app.add_option("--k-policy", k_policy, "paper: round(pi/4*sqrt(2^n)); optimal: round(pi/(4 theta) - 1/2)")
        ->check(CLI::IsMember({"paper", "optimal"}));
    app.add_option("--marked", marked, "ones | random")->check(CLI::IsMember({"ones", "random"}));
    app.add_option("--seed", seed, "Seed for marked-state and sampling streams");
    app.add_option("--out", out_path, "Output CSV path")->required();
    app.add_option("--jobs", jobs, "Sweep points run in parallel")->check(CLI::PositiveNumber);
    app.add_option("--sv-max-qubits", sv_max_qubits, "Statevector capacity cap; larger points are skipped")
        ->check(CLI::Range(1, 40));

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitConfig;
    }

    BenchConfig config;
    SweepResult result;
    try {
        config.experiment = parse_experiment(experiment);
        config.n_min = n_min;
        config.n_max = n_max;
        config.backends = parse_list<Backend>(backends, parse_backend);
        config.modes = parse_list<Mode>(modes, parse_mode);
        config.precisions = parse_list<Precision>(precisions, parse_precision);
        config.shots_list = shots;
        config.trials = trials;
        config.chi_max = chi_max;
        config.k_policy = parse_k_policy(k_policy);
        config.marked_policy = parse_marked_policy(marked);
        config.seed = seed;
        config.output_path = out_path;
        config.jobs = jobs;
        config.max_statevector_qubits = sv_max_qubits;
        validate(config);
    } catch (const Error &e) {
        std::cerr << "bench-cli: " << e.what() << "\n";
        return kExitConfig;
    }

    try {
        result = run_sweep(config);
        emit_csv(result.records, config.output_path);
    } catch (const Error &e) {
        std::cerr << "bench-cli: " << e.what() << "\n";
        return kExitConfig;
    }

    for (const auto &skip : result.skips) std::cerr << "bench-cli: skipped " << skip.point << ": " << skip.reason << "\n";
    std::cerr << "bench-cli: wrote " << result.records.size() << " records to " << config.output_path << "\n";
    return result.skips.empty() ? kExitOk : kExitPartial;
}
