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

// fogdeploy: experiment runner for availability-aware fog service placement.
//
// Exit codes: 0 success, 2 usage/config error, 3 internal failure.

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "fogdeploy/error.hpp"
#include "fogdeploy/experiments.hpp"
#include "fogdeploy/parallel.hpp"

namespace {

constexpr int kUsageError = 2;
constexpr int kInternalError = 3;

bool is_config_error(fogdeploy::ErrorCode code) {
    using fogdeploy::ErrorCode;
    switch (code) {
        case ErrorCode::InvalidArgument:
        case ErrorCode::BudgetTooSmall:
        case ErrorCode::BadLattice:
        case ErrorCode::ParseError:
        case ErrorCode::UnknownVersion:
        case ErrorCode::SearchSpaceTooLarge:
            return true;
        default:
            return false;
    }
}

}  // namespace

int main(int argc, char** argv) {
    using namespace fogdeploy;

    CLI::App app{"Bi-objective fog service deployment (fog utilization vs. availability) with MOPSO, NSGA-II and MOEA/D"};
    std::string experiment_name = "evolution";
    std::string algo = "all";
    std::string seeds = "0";
    std::string factors = "1,2,4";
    std::string dump_scenario;
    std::vector<std::string> params;
    RunConfig cfg;

    app.add_option("--experiment", experiment_name, "evolution | deadline | scaling | exact")
        ->check(CLI::IsMember({"evolution", "deadline", "scaling", "exact"}));
    app.add_option("--algo", algo, "mopso | nsga2 | moead | all")
        ->check(CLI::IsMember({"mopso", "nsga2", "moead", "all"}));
    app.add_option("--scenario", cfg.scenario, "'paper' (built-in reference scenario) or a scenario JSON file");
    app.add_option("--scenario-seed", cfg.scenario_seed, "seed for the built-in scenario");
    app.add_option("--seeds", seeds, "algorithm seeds: N, A..B or A,B,C");
    app.add_option("--evals", cfg.max_evaluations, "evaluation budget per run");
    app.add_option("--out", cfg.output_dir, "output directory");
    app.add_option("--param", params, "algorithm parameter override key=value (repeatable)");
    app.add_option("--factors", factors, "replication factors for the scaling experiment");
    app.add_option("--repeats", cfg.scaling_repeats, "timing repetitions per scaling point");
    app.add_option("--write-scenario", dump_scenario, "write the selected scenario as JSON and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    if (const char* env = std::getenv(kWorkersEnv)) {
        const int workers = std::atoi(env);
        if (workers < 1) {
            std::cerr << "error: " << kWorkersEnv << " must be a positive integer\n";
            return kUsageError;
        }
        set_worker_count(workers);
    }

    try {
        if (algo == "all") {
            cfg.algorithms = {Algorithm::Mopso, Algorithm::Nsga2, Algorithm::Moead};
        } else {
            cfg.algorithms = {*parse_algorithm(algo)};
        }
        cfg.seeds = parse_seeds(seeds);
        cfg.factors = parse_factors(factors);
        for (const auto& p : params) apply_param(cfg.params, p);

        if (!dump_scenario.empty()) {
            save(resolve_scenario(cfg), dump_scenario);
            std::cout << dump_scenario << '\n';
            return 0;
        }
        const auto written = run_experiment(*parse_experiment(experiment_name), cfg);
        for (const auto& path : written) std::cout << path.string() << '\n';
        return 0;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return is_config_error(e.code()) ? kUsageError : kInternalError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInternalError;
    }
}
