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

#include <algorithm>
#include <random>
#include <vector>

#include "fogdeploy/moea.hpp"

namespace fogdeploy::detail {

/// Per-run bookkeeping shared by the three optimizers: seeded RNG, the
/// evaluation budget, the external archive and the generation trace.
class SearchContext {
public:
    SearchContext(const ProblemInstance& prob, const AlgoParams& params);

    const ProblemInstance& problem() const noexcept { return prob_; }
    const AlgoParams& params() const noexcept { return params_; }
    std::mt19937_64& rng() noexcept { return rng_; }
    const ParetoArchive& archive() const noexcept { return archive_; }

    std::size_t genes() const noexcept { return prob_.service_count(); }
    ResourceId resources() const noexcept { return static_cast<ResourceId>(prob_.resource_count()); }
    std::size_t remaining() const noexcept { return params_.max_evaluations - evaluations_; }

    /// Evaluates the batch (in parallel when the policy allows), charges the
    /// budget, and offers each result to the archive in batch order.
    std::vector<Solution> evaluate(std::vector<Deployment> batch);

    /// First population: the all-cloud anchor followed by uniform random
    /// assignments.
    std::vector<Deployment> initial_population(std::size_t size);

    Deployment random_deployment();
    ResourceId random_resource();
    double uniform01();
    std::size_t random_index(std::size_t n);

    void uniform_crossover(Deployment& a, Deployment& b);
    void reset_mutation(Deployment& d, double per_gene);
    double mutation_probability() const noexcept;

    void record(std::span<const Solution> population);

    RunResult finish();

private:
    const ProblemInstance& prob_;
    AlgoParams params_;
    std::mt19937_64 rng_;
    std::size_t evaluations_ = 0;
    ParetoArchive archive_;
    std::vector<GenerationRecord> trace_;
};

}  // namespace fogdeploy::detail
