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

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "fogdeploy/moea.hpp"
#include "fogdeploy/scenario.hpp"

namespace fogdeploy {

enum class Experiment { Evolution, Deadline, Scaling, Exact };

std::optional<Experiment> parse_experiment(std::string_view name) noexcept;

struct RunConfig {
    std::vector<Algorithm> algorithms{Algorithm::Mopso, Algorithm::Nsga2, Algorithm::Moead};
    std::string scenario = "paper";  // "paper" or a scenario file path
    std::uint64_t scenario_seed = 0;  // only used for "paper"
    std::vector<std::uint64_t> seeds{0};
    std::size_t max_evaluations = 1000;
    std::filesystem::path output_dir = "out";
    AlgoParams params;               // seed and budget are overridden per run
    std::vector<int> factors{1, 2, 4};
    int scaling_repeats = 3;         // scaling keeps the fastest repetition
};

/// "3", "0..9" or "1,4,7".
std::vector<std::uint64_t> parse_seeds(std::string_view text);
std::vector<int> parse_factors(std::string_view text);

/// Applies one `key=value` override. Keys: population, archive, w, c1, c2,
/// grid, mutation_rate, crossover, mutation, T, H.
void apply_param(AlgoParams& params, std::string_view assignment);

/// Throws Error{InvalidArgument} / Error{BudgetTooSmall} with a message
/// naming the broken constraint.
void validate(const RunConfig& cfg);

ScenarioSpec resolve_scenario(const RunConfig& cfg);

struct RunRecord {
    Algorithm algorithm = Algorithm::Mopso;
    std::uint64_t seed = 0;
    RunResult result;
};

/// One run per (algorithm, seed), ordered algorithm-major. Runs execute
/// concurrently on the OpenMP pool; the output order and content do not
/// depend on the worker count.
std::vector<RunRecord> execute_runs(const ProblemInstance& prob, const RunConfig& cfg);

std::string evolution_csv(const std::vector<RunRecord>& runs);
std::string archive_csv(const ProblemInstance& prob, const std::vector<RunRecord>& runs);
std::string deadline_csv(const ProblemInstance& prob, const std::vector<RunRecord>& runs);
std::string exact_csv(const ProblemInstance& prob, std::uint64_t cap);

struct ScalingRow {
    Algorithm algorithm = Algorithm::Mopso;
    std::size_t services = 0;
    double wall_time_ms = 0.0;
    double time_per_evaluation_us = 0.0;
};

std::vector<ScalingRow> measure_scaling(const ScenarioSpec& spec, const RunConfig& cfg);
std::string scaling_csv(const std::vector<ScalingRow>& rows);

std::string summary_report(const std::vector<RunRecord>& runs);

/// Runs the experiment and writes its files into cfg.output_dir. Files are
/// staged and renamed into place; nothing is left behind on failure.
std::vector<std::filesystem::path> run_experiment(Experiment experiment, const RunConfig& cfg);

}  // namespace fogdeploy
