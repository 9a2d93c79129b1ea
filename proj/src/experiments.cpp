/*
 * Copyright 2026 The fogdeploy Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "fogdeploy/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <map>

#include <fmt/core.h>
#include <fmt/format.h>

#include "fogdeploy/error.hpp"
#include "fogdeploy/oracle.hpp"
#include "fogdeploy/timing.hpp"

namespace fogdeploy {

std::optional<Experiment> parse_experiment(std::string_view name) noexcept {
    if (name == "evolution") return Experiment::Evolution;
    if (name == "deadline") return Experiment::Deadline;
    if (name == "scaling") return Experiment::Scaling;
    if (name == "exact") return Experiment::Exact;
    return std::nullopt;
}

namespace {

[[noreturn]] void config_error(const std::string& message) { throw Error(ErrorCode::InvalidArgument, message); }

template <typename T>
T parse_number(std::string_view text, std::string_view what) {
    T value{};
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || text.empty())
        config_error(fmt::format("cannot parse {} from '{}'", what, text));
    return value;
}

double parse_double(std::string_view text, std::string_view what) {
    // from_chars for double is missing from older libstdc++.
    const std::string s(text);
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(s, &used);
    } catch (const std::exception&) {
        used = std::string::npos;
    }
    if (used != s.size()) config_error(fmt::format("cannot parse {} from '{}'", what, text));
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

std::string num(double v) { return fmt::format("{}", v); }

}  // namespace

std::vector<std::uint64_t> parse_seeds(std::string_view text) {
    std::vector<std::uint64_t> seeds;
    if (const auto dots = text.find(".."); dots != std::string_view::npos) {
        const auto lo = parse_number<std::uint64_t>(text.substr(0, dots), "seed range start");
        const auto hi = parse_number<std::uint64_t>(text.substr(dots + 2), "seed range end");
        if (hi < lo) config_error(fmt::format("empty seed range '{}'", text));
        if (hi - lo >= 1'000'000) config_error("seed range too large");
        for (std::uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
        return seeds;
    }
    for (auto part : split(text, ',')) seeds.push_back(parse_number<std::uint64_t>(part, "seed"));
    return seeds;
}

std::vector<int> parse_factors(std::string_view text) {
    std::vector<int> factors;
    if (text.empty()) return factors;
    for (auto part : split(text, ',')) factors.push_back(parse_number<int>(part, "replication factor"));
    return factors;
}

void apply_param(AlgoParams& p, std::string_view assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string_view::npos) config_error(fmt::format("--param expects key=value, got '{}'", assignment));
    const std::string_view key = assignment.substr(0, eq);
    const std::string_view value = assignment.substr(eq + 1);
    if (key == "population") p.population_size = parse_number<std::size_t>(value, key);
    else if (key == "archive") p.archive_capacity = parse_number<std::size_t>(value, key);
    else if (key == "w") p.mopso.inertia = parse_double(value, key);
    else if (key == "c1") p.mopso.cognitive = parse_double(value, key);
    else if (key == "c2") p.mopso.social = parse_double(value, key);
    else if (key == "grid") p.mopso.grid_divisions = parse_number<int>(value, key);
    else if (key == "mutation_rate") p.mopso.mutation_rate = parse_double(value, key);
    else if (key == "crossover") p.nsga2.crossover_probability = parse_double(value, key);
    else if (key == "mutation") p.nsga2.mutation_probability = parse_double(value, key);
    else if (key == "T") p.moead.neighborhood_size = parse_number<std::size_t>(value, key);
    else if (key == "H") p.moead.lattice_resolution = parse_number<std::size_t>(value, key);
    else config_error(fmt::format("unknown parameter '{}'", key));
}

void validate(const RunConfig& cfg) {
    if (cfg.algorithms.empty()) config_error("no algorithm selected");
    if (cfg.seeds.empty()) config_error("at least one seed is required");
    if (cfg.max_evaluations == 0) config_error("--evals must be positive");
    if (cfg.scaling_repeats < 1) config_error("scaling repeats must be >= 1");
    AlgoParams p = cfg.params;
    p.max_evaluations = cfg.max_evaluations;
    validate(p);
}

ScenarioSpec resolve_scenario(const RunConfig& cfg) {
    if (cfg.scenario == "paper") return default_spec(cfg.scenario_seed);
    return load(cfg.scenario);
}

std::vector<RunRecord> execute_runs(const ProblemInstance& prob, const RunConfig& cfg) {
    validate(cfg);
    std::vector<RunRecord> runs;
    for (Algorithm a : cfg.algorithms)
        for (std::uint64_t s : cfg.seeds) runs.push_back({a, s, RunResult{}});

    const auto jobs = static_cast<long>(runs.size());
    const bool concurrent = jobs > 1 && worker_count() > 1;
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic) if (concurrent)
    for (long j = 0; j < jobs; ++j) {
        RunRecord& r = runs[static_cast<std::size_t>(j)];
        AlgoParams p = cfg.params;
        p.seed = r.seed;
        p.max_evaluations = cfg.max_evaluations;
        if (concurrent) p.policy = ExecutionPolicy::Serial;
        try {
            r.result = run(r.algorithm, prob, p);
        } catch (...) {
#pragma omp critical(fogdeploy_run_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return runs;
}

std::string evolution_csv(const std::vector<RunRecord>& runs) {
    std::string out =
        "algorithm,seed,evaluations,best_fog_utilization,best_availability,compromise_fog_utilization,"
        "compromise_availability,hypervolume,feasible_fraction\n";
    for (const auto& r : runs) {
        for (const auto& g : r.result.trace) {
            out += fmt::format("{},{},{},{},{},{},{},{},{}\n", to_string(r.algorithm), r.seed, g.evaluations,
                               num(g.best_fog_utilization), num(g.best_availability),
                               num(g.compromise_fog_utilization), num(g.compromise_availability),
                               num(g.hypervolume), num(g.feasible_fraction));
        }
    }
    return out;
}

namespace {

constexpr const char* kArchiveHeader = "algorithm,seed,fog_utilization,availability,raw_availability,feasible,assignment\n";

std::string archive_row(std::string_view algo, std::uint64_t seed, const Solution& s, const ProblemInstance& prob) {
    return fmt::format("{},{},{},{},{},{},{}\n", algo, seed, num(s.objectives.fog_utilization),
                       num(s.objectives.availability), num(raw_availability(s.genotype, prob)),
                       s.feasible() ? "true" : "false", fmt::join(s.genotype.assignment, " "));
}

}  // namespace

std::string archive_csv(const ProblemInstance& prob, const std::vector<RunRecord>& runs) {
    std::string out = kArchiveHeader;
    for (const auto& r : runs)
        for (const auto& m : r.result.archive.members()) out += archive_row(to_string(r.algorithm), r.seed, m, prob);
    return out;
}

std::string exact_csv(const ProblemInstance& prob, std::uint64_t cap) {
    const ExactFront front = exact_pareto(prob, cap);
    std::string out = kArchiveHeader;
    for (const auto& s : front.solutions) out += archive_row("exact", 0, s, prob);
    return out;
}

std::string deadline_csv(const ProblemInstance& prob, const std::vector<RunRecord>& runs) {
    std::string out = "algorithm,seed,app,response_time_s,deadline_s,satisfied\n";
    for (const auto& r : runs) {
        const Solution& c = select_compromise(r.result.archive);
        const ResponseTimeReport report = timing_report(c.genotype, prob);
        for (std::size_t i = 0; i < prob.apps().size(); ++i) {
            const auto& rt = report.app_response_s[i];
            const double deadline = prob.app(i).deadline_s;
            out += fmt::format("{},{},{},{},{},{}\n", to_string(r.algorithm), r.seed, prob.app(i).id + 1,
                               rt ? num(*rt) : std::string("SAT"), num(deadline),
                               rt && *rt <= deadline ? "true" : "false");
        }
    }
    return out;
}

std::vector<ScalingRow> measure_scaling(const ScenarioSpec& spec, const RunConfig& cfg) {
    validate(cfg);
    if (cfg.factors.empty()) config_error("--factors needs at least one replication factor");
    for (int f : cfg.factors)
        if (f < 1) config_error(fmt::format("replication factor {} must be >= 1", f));

    std::vector<ScalingRow> rows;
    for (Algorithm a : cfg.algorithms) {
        for (int f : cfg.factors) {
            const ProblemInstance prob = scaled_scenario(spec, f);
            AlgoParams p = cfg.params;
            p.seed = cfg.seeds.front();
            p.max_evaluations = cfg.max_evaluations;
            double best_ms = std::numeric_limits<double>::infinity();
            std::size_t evals = 0;
            for (int rep = 0; rep < cfg.scaling_repeats; ++rep) {
                const auto t0 = std::chrono::steady_clock::now();
                const RunResult res = run(a, prob, p);
                const auto t1 = std::chrono::steady_clock::now();
                best_ms = std::min(best_ms, std::chrono::duration<double, std::milli>(t1 - t0).count());
                evals = res.evaluations;
            }
            rows.push_back({a, prob.service_count(), best_ms, best_ms * 1000.0 / static_cast<double>(evals)});
        }
    }
    return rows;
}

std::string scaling_csv(const std::vector<ScalingRow>& rows) {
    std::string out = "algorithm,N_services,wall_time_ms,time_per_evaluation_us\n";
    for (const auto& r : rows)
        out += fmt::format("{},{},{:.3f},{:.3f}\n", to_string(r.algorithm), r.services, r.wall_time_ms,
                           r.time_per_evaluation_us);
    return out;
}

std::string summary_report(const std::vector<RunRecord>& runs) {
    struct Tally {
        std::size_t runs = 0, floor_met = 0;
        double fog = 0.0, availability = 0.0, hypervolume = 0.0, archive = 0.0;
    };
    std::map<Algorithm, Tally> tally;
    for (const auto& r : runs) {
        Tally& t = tally[r.algorithm];
        const Solution& c = select_compromise(r.result.archive);
        ++t.runs;
        t.fog += c.objectives.fog_utilization;
        t.availability += c.objectives.availability;
        if (c.objectives.fog_utilization >= 0.70) ++t.floor_met;
        const auto objs = r.result.archive.feasible_objectives();
        if (!objs.empty()) t.hypervolume += hypervolume_2d(objs);
        t.archive += static_cast<double>(r.result.archive.size());
    }
    std::string out = "algorithm  runs  mean_fog  mean_avail  fog>=0.70  mean_hv  mean_archive\n";
    for (const auto& [algo, t] : tally) {
        const double n = static_cast<double>(t.runs);
        out += fmt::format("{:<9}  {:>4}  {:>8.4f}  {:>10.4f}  {:>6}/{:<2}  {:>7.4f}  {:>12.1f}\n", to_string(algo),
                           t.runs, t.fog / n, t.availability / n, t.floor_met, t.runs, t.hypervolume / n,
                           t.archive / n);
    }
    return out;
}

namespace {

class StagedOutput {
public:
    explicit StagedOutput(std::filesystem::path dir) : dir_(std::move(dir)) {}
    StagedOutput(const StagedOutput&) = delete;
    StagedOutput& operator=(const StagedOutput&) = delete;

    ~StagedOutput() {
        if (committed_) return;
        std::error_code ec;
        for (const auto& p : staged_) std::filesystem::remove(p, ec);
        for (const auto& p : placed_) std::filesystem::remove(p, ec);
    }

    void add(const std::string& name, const std::string& content) {
        const auto tmp = dir_ / (name + ".tmp");
        staged_.push_back(tmp);
        std::ofstream out(tmp, std::ios::binary);
        out << content;
        if (!out) throw Error(ErrorCode::InvalidArgument, fmt::format("cannot write '{}'", tmp.string()));
        names_.push_back(name);
    }

    std::vector<std::filesystem::path> commit() {
        for (std::size_t i = 0; i < names_.size(); ++i) {
            const auto dest = dir_ / names_[i];
            std::filesystem::rename(staged_[i], dest);
            placed_.push_back(dest);
        }
        committed_ = true;
        return placed_;
    }

private:
    std::filesystem::path dir_;
    std::vector<std::filesystem::path> staged_;
    std::vector<std::filesystem::path> placed_;
    std::vector<std::string> names_;
    bool committed_ = false;
};

}  // namespace

std::vector<std::filesystem::path> run_experiment(Experiment experiment, const RunConfig& cfg) {
    validate(cfg);
    const ScenarioSpec spec = resolve_scenario(cfg);
    std::filesystem::create_directories(cfg.output_dir);
    StagedOutput out(cfg.output_dir);

    switch (experiment) {
        case Experiment::Evolution: {
            const ProblemInstance prob = build_instance(spec);
            const auto runs = execute_runs(prob, cfg);
            out.add("evolution.csv", evolution_csv(runs));
            out.add("archive.csv", archive_csv(prob, runs));
            out.add("summary.txt", summary_report(runs));
            break;
        }
        case Experiment::Deadline: {
            const ProblemInstance prob = build_instance(spec);
            out.add("deadline.csv", deadline_csv(prob, execute_runs(prob, cfg)));
            break;
        }
        case Experiment::Scaling:
            out.add("scaling.csv", scaling_csv(measure_scaling(spec, cfg)));
            break;
        case Experiment::Exact:
            out.add("exact.csv", exact_csv(build_instance(spec), kDefaultSearchCap));
            break;
    }
    return out.commit();
}

}  // namespace fogdeploy
