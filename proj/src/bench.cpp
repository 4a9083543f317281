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

#include "grover_mps/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <limits>
#include <set>
#include <thread>

#include "grover_mps/rng.hpp"

namespace grover::bench {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

template <class E>
E parse_enum(std::string_view s, std::initializer_list<std::pair<std::string_view, E>> table, const char *what) {
    for (const auto &[name, value] : table) {
        if (name == s) return value;
    }
    throw InvalidInput(std::string("unknown ") + what + " '" + std::string(s) + "'");
}

template <class T>
void require_unique(const std::vector<T> &v, const char *what) {
    if (v.empty()) throw InvalidInput(std::string("bench: ") + what + " list is empty");
    if (std::set<T>(v.begin(), v.end()).size() != v.size()) {
        throw InvalidInput(std::string("bench: ") + what + " list has duplicates");
    }
}

// Values from a single-precision run are stored at float resolution so the
// 9-digit CSV form reproduces them exactly.
double quantize(double x, Precision p) { return p == Precision::Single ? double(float(x)) : x; }

struct Point {
    int n;
    Backend backend;
    Mode mode;
    Precision precision;
};

std::string describe(const Point &p) {
    return "n=" + std::to_string(p.n) + " backend=" + to_string(p.backend) + " mode=" + to_string(p.mode) +
           " precision=" + std::string(grover::to_string(p.precision));
}

std::vector<Point> lattice(const BenchConfig &config) {
    std::vector<Point> points;
    for (int n = config.n_min; n <= config.n_max; ++n)
        for (Backend b : config.backends)
            for (Mode m : config.modes)
                for (Precision p : config.precisions) points.push_back({n, b, m, p});
    return points;
}

GroverSpec spec_for(const BenchConfig &config, const Point &p) {
    GroverSpec spec;
    spec.n = p.n;
    spec.marked = marked_for(config, p.n);
    spec.k_policy = config.k_policy;
    spec.mode = p.mode;
    spec.backend = p.backend;
    spec.precision = p.precision;
    spec.chi_max = config.chi_max;
    spec.seed = config.seed;
    spec.max_statevector_qubits = config.max_statevector_qubits;
    return spec;
}

BenchRecord base_record(const BenchConfig &config, const Point &p) {
    BenchRecord r;
    r.experiment = config.experiment;
    r.n = p.n;
    r.backend = p.backend;
    r.mode = p.mode;
    r.precision = p.precision;
    r.k_policy = config.k_policy;
    r.k = iteration_count(p.n, config.k_policy);
    return r;
}

BenchRecord skipped_record(const BenchConfig &config, const Point &p, std::uint64_t shots, std::uint64_t trial) {
    BenchRecord r = base_record(config, p);
    r.shots = shots;
    r.trial = trial;
    r.wall_time_seconds = kNaN;
    r.marked_amplitude_exact = kNaN;
    r.marked_amplitude_sampled = kNaN;
    r.discarded_weight = kNaN;
    r.skipped = true;
    return r;
}

BenchRecord result_record(const BenchConfig &config, const Point &p, const GroverResult &g) {
    BenchRecord r = base_record(config, p);
    r.k = g.k;
    r.wall_time_seconds = g.wall_time_seconds;
    r.marked_amplitude_exact = quantize(std::abs(g.marked_amplitude), p.precision);
    r.marked_amplitude_sampled = kNaN;
    r.peak_program_ops = g.peak_program_ops;
    r.max_bond_dim = g.max_bond_dim;
    r.discarded_weight = quantize(g.discarded_weight, p.precision);
    return r;
}

std::uint64_t sampling_seed(const BenchConfig &config, const Point &p, std::uint64_t shots, std::uint64_t trial) {
    std::uint64_t s = derive_seed(config.seed, std::uint64_t(p.n));
    s = derive_seed(s, std::uint64_t(p.backend) * 4 + std::uint64_t(p.mode) * 2 + std::uint64_t(p.precision));
    s = derive_seed(s, shots);
    return derive_seed(s, trial);
}

struct TaskOutput {
    std::vector<BenchRecord> records;
    std::optional<Skip> skip;
};

TaskOutput run_point(const BenchConfig &config, const Point &p) {
    TaskOutput out;
    const auto spec = spec_for(config, p);
    try {
        if (config.experiment == Experiment::Shots) {
            const auto run = execute(spec);
            for (std::uint64_t shots : config.shots_list)
                for (std::uint64_t trial = 0; trial < config.trials; ++trial) {
                    auto r = result_record(config, p, run.result);
                    r.shots = shots;
                    r.trial = trial;
                    const auto h = sample(run.state, shots, sampling_seed(config, p, shots, trial));
                    const auto it = h.find(spec.marked);
                    const double hits = it == h.end() ? 0.0 : double(it->second);
                    r.marked_amplitude_sampled = quantize(std::sqrt(hits / double(shots)), p.precision);
                    out.records.push_back(r);
                }
        } else {
            for (std::uint64_t trial = 0; trial < config.trials; ++trial) {
                auto r = result_record(config, p, run(spec));
                r.trial = trial;
                out.records.push_back(r);
            }
        }
    } catch (const Error &e) {
        // Capacity and numerical failures cost one point, not the sweep.
        if (e.kind() != ErrorKind::CapacityExceeded && e.kind() != ErrorKind::NumericalFailure) throw;
        out.records.clear();
        const std::vector<std::uint64_t> zero_shots{0};
        const auto &shots_list = config.experiment == Experiment::Shots ? config.shots_list : zero_shots;
        for (std::uint64_t shots : shots_list)
            for (std::uint64_t trial = 0; trial < config.trials; ++trial)
                out.records.push_back(skipped_record(config, p, shots, trial));
        out.skip = Skip{describe(p), e.what()};
    }
    return out;
}

SweepResult run_lattice(const BenchConfig &config) {
    validate(config);
    const auto points = lattice(config);
    std::vector<TaskOutput> outputs(points.size());
    std::vector<std::exception_ptr> errors(points.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < points.size(); i = next++) {
            try {
                outputs[i] = run_point(config, points[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned jobs = std::min<unsigned>(config.jobs, unsigned(std::max<std::size_t>(points.size(), 1)));
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto &t : pool) t.join();
    }
    for (auto &e : errors) {
        if (e) std::rethrow_exception(e);
    }

    SweepResult result;
    for (auto &o : outputs) {
        // Points are enumerated in key order; within a point records are
        // already ordered by (shots, trial).
        result.records.insert(result.records.end(), o.records.begin(), o.records.end());
        if (o.skip) result.skips.push_back(*o.skip);
    }
    return result;
}

void require_experiment(const BenchConfig &config, Experiment e) {
    if (config.experiment != e) {
        throw InvalidInput(std::string("bench: config experiment is '") + to_string(config.experiment) + "', expected '" +
                           to_string(e) + "'");
    }
}

std::string format_real(double v, int digits) {
    if (std::isnan(v)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

std::string format_count(const std::optional<std::uint64_t> &v) { return v ? std::to_string(*v) : "nan"; }

double parse_real(std::string_view s) {
    if (s == "nan") return kNaN;
    double v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw InvalidInput("csv: bad real '" + std::string(s) + "'");
    return v;
}

std::uint64_t parse_uint(std::string_view s) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw InvalidInput("csv: bad integer '" + std::string(s) + "'");
    }
    return v;
}

std::optional<std::uint64_t> parse_count(std::string_view s) {
    if (s == "nan") return std::nullopt;
    return parse_uint(s);
}

constexpr const char *kColumns[] = {
    "experiment", "n",     "backend", "mode", "precision", "k", "shots", "trial", "wall_time_seconds",
    "marked_amplitude_exact", "marked_amplitude_sampled", "peak_program_ops", "max_bond_dim", "discarded_weight",
    "k_policy", "status"};
constexpr std::size_t kNumColumns = std::size(kColumns);

}  // namespace

const char *to_string(Experiment e) noexcept {
    switch (e) {
    case Experiment::Runtime:
        return "runtime";
    case Experiment::Amplitude:
        return "amplitude";
    case Experiment::Shots:
        return "shots";
    }
    return "unknown";
}

const char *to_string(MarkedPolicy m) noexcept { return m == MarkedPolicy::AllOnes ? "ones" : "random"; }

Experiment parse_experiment(std::string_view s) {
    return parse_enum<Experiment>(
        s, {{"runtime", Experiment::Runtime}, {"amplitude", Experiment::Amplitude}, {"shots", Experiment::Shots}},
        "experiment");
}

Backend parse_backend(std::string_view s) {
    return parse_enum<Backend>(s, {{"sv", Backend::Statevector}, {"mps", Backend::Mps}}, "backend");
}

Mode parse_mode(std::string_view s) {
    return parse_enum<Mode>(s, {{"common", Mode::Common}, {"iterative", Mode::Iterative}}, "mode");
}

Precision parse_precision(std::string_view s) {
    return parse_enum<Precision>(s, {{"f32", Precision::Single}, {"f64", Precision::Double}}, "precision");
}

KPolicy parse_k_policy(std::string_view s) {
    return parse_enum<KPolicy>(s, {{"paper", KPolicy::RoundedQuarterPi}, {"optimal", KPolicy::Optimal}}, "k policy");
}

MarkedPolicy parse_marked_policy(std::string_view s) {
    return parse_enum<MarkedPolicy>(s, {{"ones", MarkedPolicy::AllOnes}, {"random", MarkedPolicy::Random}},
                                    "marked policy");
}

void validate(const BenchConfig &config) {
    if (config.n_min < 1) throw InvalidInput("bench: n_min must be >= 1");
    if (config.n_max < config.n_min) throw InvalidInput("bench: n_max must be >= n_min");
    if (config.n_max > 64) throw InvalidInput("bench: n_max must be <= 64");
    require_unique(config.backends, "backend");
    require_unique(config.modes, "mode");
    require_unique(config.precisions, "precision");
    if (config.trials < 1) throw InvalidInput("bench: trials must be >= 1");
    if (config.chi_max < 1) throw InvalidInput("bench: chi_max must be >= 1");
    if (config.jobs < 1) throw InvalidInput("bench: jobs must be >= 1");
    if (config.experiment == Experiment::Shots) {
        require_unique(config.shots_list, "shots");
        for (auto s : config.shots_list) {
            if (s < 1) throw InvalidInput("bench: shot counts must be >= 1");
        }
    }
}

std::string marked_for(const BenchConfig &config, int n) {
    if (config.marked_policy == MarkedPolicy::AllOnes) return std::string(std::size_t(n), '1');
    Rng rng(derive_seed(config.seed, 0x6d61726bull + std::uint64_t(n)));
    std::string bits(std::size_t(n), '0');
    for (auto &c : bits) c = (rng() >> 63) ? '1' : '0';
    return bits;
}

std::uint64_t lattice_size(const BenchConfig &config) {
    const std::uint64_t points = std::uint64_t(config.n_max - config.n_min + 1) * config.backends.size() *
                                 config.modes.size() * config.precisions.size();
    const std::uint64_t per_point =
        config.trials * (config.experiment == Experiment::Shots ? config.shots_list.size() : 1);
    return points * per_point;
}

SweepResult run_runtime_sweep(const BenchConfig &config) {
    require_experiment(config, Experiment::Runtime);
    return run_lattice(config);
}

SweepResult run_amplitude_sweep(const BenchConfig &config) {
    require_experiment(config, Experiment::Amplitude);
    return run_lattice(config);
}

SweepResult run_shot_sweep(const BenchConfig &config) {
    require_experiment(config, Experiment::Shots);
    return run_lattice(config);
}

SweepResult run_sweep(const BenchConfig &config) { return run_lattice(config); }

std::string csv_header() {
    std::string out;
    for (std::size_t i = 0; i < kNumColumns; ++i) {
        if (i) out += ',';
        out += kColumns[i];
    }
    return out;
}

std::string to_csv(const std::vector<BenchRecord> &records) {
    std::string out = csv_header() + "\n";
    for (const auto &r : records) {
        const int digits = r.precision == Precision::Single ? 9 : 17;
        out += to_string(r.experiment);
        out += ',' + std::to_string(r.n);
        out += ',' + std::string(to_string(r.backend));
        out += ',' + std::string(to_string(r.mode));
        out += ',' + std::string(grover::to_string(r.precision));
        out += ',' + std::to_string(r.k);
        out += ',' + std::to_string(r.shots);
        out += ',' + std::to_string(r.trial);
        out += ',' + format_real(r.wall_time_seconds, 17);
        out += ',' + format_real(r.marked_amplitude_exact, digits);
        out += ',' + format_real(r.marked_amplitude_sampled, digits);
        out += ',' + format_count(r.peak_program_ops);
        out += ',' + format_count(r.max_bond_dim);
        out += ',' + format_real(r.discarded_weight, digits);
        out += ',' + std::string(to_string(r.k_policy));
        out += r.skipped ? ",skipped" : ",ok";
        out += '\n';
    }
    return out;
}

void emit_csv(const std::vector<BenchRecord> &records, const std::string &path) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open '" + path + "' for writing");
    const auto text = to_csv(records);
    file.write(text.data(), std::streamsize(text.size()));
    file.close();
    if (!file) throw IoError("failed writing '" + path + "'");
}

std::vector<BenchRecord> parse_csv(std::string_view text) {
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        lines.push_back(text.substr(0, nl));
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    }
    if (lines.empty() || lines[0] != csv_header()) throw InvalidInput("csv: missing or unexpected header");

    std::vector<BenchRecord> records;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        std::vector<std::string_view> f;
        std::string_view line = lines[li];
        for (;;) {
            const auto comma = line.find(',');
            f.push_back(line.substr(0, comma));
            if (comma == std::string_view::npos) break;
            line = line.substr(comma + 1);
        }
        if (f.size() != kNumColumns) {
            throw InvalidInput("csv: line " + std::to_string(li + 1) + " has " + std::to_string(f.size()) + " fields");
        }
        BenchRecord r;
        r.experiment = parse_experiment(f[0]);
        r.n = int(parse_uint(f[1]));
        r.backend = parse_backend(f[2]);
        r.mode = parse_mode(f[3]);
        r.precision = parse_precision(f[4]);
        r.k = parse_uint(f[5]);
        r.shots = parse_uint(f[6]);
        r.trial = parse_uint(f[7]);
        r.wall_time_seconds = parse_real(f[8]);
        r.marked_amplitude_exact = quantize(parse_real(f[9]), r.precision);
        r.marked_amplitude_sampled = quantize(parse_real(f[10]), r.precision);
        r.peak_program_ops = parse_count(f[11]);
        r.max_bond_dim = parse_count(f[12]);
        r.discarded_weight = quantize(parse_real(f[13]), r.precision);
        r.k_policy = parse_k_policy(f[14]);
        if (f[15] != "ok" && f[15] != "skipped") throw InvalidInput("csv: bad status '" + std::string(f[15]) + "'");
        r.skipped = f[15] == "skipped";
        records.push_back(r);
    }
    return records;
}

}  // namespace grover::bench
