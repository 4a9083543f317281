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

// Python bindings. Enums travel as their CLI spellings ("sv", "iterative",
// "f32", ...) and results come back as plain dicts.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "grover_mps/bench.hpp"
#include "grover_mps/error.hpp"
#include "grover_mps/grover.hpp"

namespace py = pybind11;

namespace {

using namespace grover;

py::object optional_count(const std::optional<std::uint64_t> &v) {
    return v ? py::object(py::int_(*v)) : py::object(py::none());
}

py::dict result_dict(const GroverResult &r) {
    py::dict d;
    d["k"] = r.k;
    d["marked_amplitude"] = r.marked_amplitude;
    d["marked_probability"] = r.marked_probability;
    d["wall_time_seconds"] = r.wall_time_seconds;
    d["peak_program_ops"] = r.peak_program_ops;
    d["layers_materialized"] = r.layers_materialized;
    d["max_bond_dim"] = r.max_bond_dim ? py::object(py::int_(*r.max_bond_dim)) : py::object(py::none());
    d["discarded_weight"] = r.discarded_weight;
    d["cutoff_weight"] = r.cutoff_weight;
    d["renormalizations"] = r.renormalizations;
    d["peak_entries"] = r.peak_entries;
    return d;
}

py::dict record_dict(const bench::BenchRecord &r) {
    py::dict d;
    d["experiment"] = bench::to_string(r.experiment);
    d["n"] = r.n;
    d["backend"] = to_string(r.backend);
    d["mode"] = to_string(r.mode);
    d["precision"] = std::string(to_string(r.precision));
    d["k"] = r.k;
    d["shots"] = r.shots;
    d["trial"] = r.trial;
    d["wall_time_seconds"] = r.wall_time_seconds;
    d["marked_amplitude_exact"] = r.marked_amplitude_exact;
    d["marked_amplitude_sampled"] = r.marked_amplitude_sampled;
    d["peak_program_ops"] = optional_count(r.peak_program_ops);
    d["max_bond_dim"] = optional_count(r.max_bond_dim);
    d["discarded_weight"] = r.discarded_weight;
    d["k_policy"] = to_string(r.k_policy);
    d["skipped"] = r.skipped;
    return d;
}

template <class T, class Parse>
std::vector<T> parse_list(const std::vector<std::string> &names, Parse parse) {
    std::vector<T> out;
    for (const auto &name : names) out.push_back(parse(name));
    return out;
}

GroverSpec make_spec(int n, std::optional<std::string> marked, const std::string &backend, const std::string &mode,
                     const std::string &precision, const std::string &k_policy, std::optional<std::uint64_t> k,
                     std::size_t chi_max, std::uint64_t seed) {
    GroverSpec spec;
    spec.n = n;
    spec.marked = marked ? *marked : std::string(n > 0 ? std::size_t(n) : 0, '1');
    spec.backend = bench::parse_backend(backend);
    spec.mode = bench::parse_mode(mode);
    spec.precision = bench::parse_precision(precision);
    spec.k_policy = bench::parse_k_policy(k_policy);
    spec.k_override = k;
    spec.chi_max = chi_max;
    spec.seed = seed;
    return spec;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Grover search on statevector and MPS backends";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<InvalidInput>(m, "InvalidInput", base.ptr());
    py::register_exception<InvalidGate>(m, "InvalidGate", base.ptr());
    py::register_exception<NumericalFailure>(m, "NumericalFailure", base.ptr());
    py::register_exception<CapacityExceeded>(m, "CapacityExceeded", base.ptr());
    py::register_exception<IoError>(m, "IoError", base.ptr());

    m.def("theta", &theta, py::arg("n"), "asin(2^(-n/2))");
    m.def(
        "iteration_count",
        [](int n, const std::string &k_policy) { return iteration_count(n, bench::parse_k_policy(k_policy)); },
        py::arg("n"), py::arg("k_policy") = "paper");
    m.def("predicted_success_probability", &predicted_success_probability, py::arg("n"), py::arg("k"),
          "sin^2((2k + 1) theta(n))");

    m.def(
        "run",
        [](int n, std::optional<std::string> marked, const std::string &backend, const std::string &mode,
           const std::string &precision, const std::string &k_policy, std::optional<std::uint64_t> k,
           std::size_t chi_max, std::uint64_t shots, std::uint64_t seed) {
            auto spec = make_spec(n, std::move(marked), backend, mode, precision, k_policy, k, chi_max, seed);
            std::optional<GroverRun> out;
            Histogram counts;
            {
                py::gil_scoped_release release;
                out.emplace(execute(spec));
                if (shots > 0) counts = sample(out->state, shots, seed);
            }
            py::dict d = result_dict(out->result);
            if (shots > 0) d["counts"] = counts;
            return d;
        },
        py::arg("n"), py::arg("marked") = py::none(), py::arg("backend") = "sv", py::arg("mode") = "iterative",
        py::arg("precision") = "f64", py::arg("k_policy") = "paper", py::arg("k") = py::none(),
        py::arg("chi_max") = mps::kDefaultChiMax, py::arg("shots") = 0, py::arg("seed") = 0,
        "Run one search. marked defaults to all ones; k overrides the policy. With shots > 0 the "
        "result carries a 'counts' histogram.");

    m.def(
        "sweep",
        [](const std::string &experiment, int n_min, int n_max, const std::vector<std::string> &backends,
           const std::vector<std::string> &modes, const std::vector<std::string> &precisions,
           const std::vector<std::uint64_t> &shots, std::uint64_t trials, std::size_t chi_max,
           const std::string &k_policy, const std::string &marked, std::uint64_t seed, unsigned jobs) {
            bench::BenchConfig config;
            config.experiment = bench::parse_experiment(experiment);
            config.n_min = n_min;
            config.n_max = n_max;
            config.backends = parse_list<Backend>(backends, bench::parse_backend);
            config.modes = parse_list<Mode>(modes, bench::parse_mode);
            config.precisions = parse_list<Precision>(precisions, bench::parse_precision);
            config.shots_list = shots;
            config.trials = trials;
            config.chi_max = chi_max;
            config.k_policy = bench::parse_k_policy(k_policy);
            config.marked_policy = bench::parse_marked_policy(marked);
            config.seed = seed;
            config.jobs = jobs;
            bench::validate(config);

            bench::SweepResult result;
            std::string csv;
            {
                py::gil_scoped_release release;
                result = bench::run_sweep(config);
                csv = bench::to_csv(result.records);
            }
            py::list records;
            for (const auto &r : result.records) records.append(record_dict(r));
            py::list skips;
            for (const auto &s : result.skips) skips.append(py::make_tuple(s.point, s.reason));
            py::dict d;
            d["records"] = records;
            d["skips"] = skips;
            d["csv"] = csv;
            return d;
        },
        py::arg("experiment") = "runtime", py::arg("n_min") = 2, py::arg("n_max") = 10,
        py::arg("backends") = std::vector<std::string>{"sv", "mps"},
        py::arg("modes") = std::vector<std::string>{"common", "iterative"},
        py::arg("precisions") = std::vector<std::string>{"f64"},
        py::arg("shots") = std::vector<std::uint64_t>{1, 8, 64, 512, 4096}, py::arg("trials") = 10,
        py::arg("chi_max") = mps::kDefaultChiMax, py::arg("k_policy") = "paper", py::arg("marked") = "ones",
        py::arg("seed") = 0, py::arg("jobs") = 1,
        "Run a sweep. Returns {'records': [...], 'skips': [(point, reason)], 'csv': text}.");

    m.def("csv_header", &bench::csv_header);
    m.def(
        "parse_csv",
        [](const std::string &text) {
            py::list out;
            for (const auto &r : bench::parse_csv(text)) out.append(record_dict(r));
            return out;
        },
        py::arg("text"));
}
