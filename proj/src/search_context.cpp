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

#include "search_context.hpp"

#include <fmt/core.h>

#include "fogdeploy/error.hpp"

namespace fogdeploy {

void validate(const AlgoParams& params) {
    if (params.population_size < 4 || params.population_size % 2 != 0)
        throw Error(ErrorCode::InvalidArgument,
                    fmt::format("population size must be even and >= 4 (got {})", params.population_size));
    if (params.max_evaluations < params.population_size)
        throw Error(ErrorCode::BudgetTooSmall,
                    fmt::format("max evaluations ({}) must be >= population size ({})", params.max_evaluations,
                                params.population_size));
    if (params.archive_capacity == 0) throw Error(ErrorCode::InvalidArgument, "archive capacity must be positive");
    const auto& m = params.mopso;
    if (m.inertia < 0.0 || m.cognitive < 0.0 || m.social < 0.0 || m.grid_divisions < 1 || m.mutation_rate < 0.0 ||
        m.mutation_rate > 1.0)
        throw Error(ErrorCode::InvalidArgument, "invalid MOPSO parameters");
    const auto& g = params.nsga2;
    if (g.crossover_probability < 0.0 || g.crossover_probability > 1.0 || g.mutation_probability > 1.0)
        throw Error(ErrorCode::InvalidArgument, "invalid variation probabilities");
    if (params.moead.neighborhood_size < 2) throw Error(ErrorCode::InvalidArgument, "MOEA/D neighborhood must be >= 2");
}

RunResult run(Algorithm algo, const ProblemInstance& prob, const AlgoParams& params) {
    switch (algo) {
        case Algorithm::Mopso: return mopso_run(prob, params);
        case Algorithm::Nsga2: return nsga2_run(prob, params);
        case Algorithm::Moead: return moead_run(prob, params);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown algorithm");
}

namespace detail {

SearchContext::SearchContext(const ProblemInstance& prob, const AlgoParams& params)
    : prob_(prob), params_(params), rng_(params.seed), archive_(params.archive_capacity) {
    validate(params_);
    if (prob_.service_count() == 0) throw Error(ErrorCode::InvalidArgument, "problem has no services");
}

std::vector<Solution> SearchContext::evaluate(std::vector<Deployment> batch) {
    if (batch.size() > remaining()) batch.resize(remaining());
    const auto evals = evaluate_population(batch, prob_, params_.policy);
    evaluations_ += batch.size();
    std::vector<Solution> out;
    out.reserve(batch.size());
    for (std::size_t i = 0; i < batch.size(); ++i) {
        out.push_back({std::move(batch[i]), evals[i].objectives, evals[i].violations});
        archive_.offer(out.back());
    }
    return out;
}

std::vector<Deployment> SearchContext::initial_population(std::size_t size) {
    std::vector<Deployment> pop;
    pop.reserve(size);
    pop.push_back(prob_.all_on(prob_.landscape().cloud()));
    while (pop.size() < size) pop.push_back(random_deployment());
    return pop;
}

Deployment SearchContext::random_deployment() {
    Deployment d;
    d.assignment.resize(genes());
    for (auto& gene : d.assignment) gene = random_resource();
    return d;
}

ResourceId SearchContext::random_resource() {
    return std::uniform_int_distribution<ResourceId>(0, resources() - 1)(rng_);
}

double SearchContext::uniform01() { return std::uniform_real_distribution<double>(0.0, 1.0)(rng_); }

std::size_t SearchContext::random_index(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
}

void SearchContext::uniform_crossover(Deployment& a, Deployment& b) {
    for (std::size_t g = 0; g < a.size(); ++g)
        if (uniform01() < 0.5) std::swap(a.assignment[g], b.assignment[g]);
}

void SearchContext::reset_mutation(Deployment& d, double per_gene) {
    for (auto& gene : d.assignment)
        if (uniform01() < per_gene) gene = random_resource();
}

double SearchContext::mutation_probability() const noexcept {
    const double p = params_.nsga2.mutation_probability;
    return p > 0.0 ? p : 1.0 / static_cast<double>(genes());
}

void SearchContext::record(std::span<const Solution> population) {
    GenerationRecord rec;
    rec.evaluations = evaluations_;
    std::vector<Solution> feasible;
    for (const auto& m : archive_.members())
        if (m.feasible()) feasible.push_back(m);
    if (!feasible.empty()) {
        for (const auto& m : feasible) {
            rec.best_fog_utilization = std::max(rec.best_fog_utilization, m.objectives.fog_utilization);
            rec.best_availability = std::max(rec.best_availability, m.objectives.availability);
        }
        const Solution& c = select_compromise(feasible);
        rec.compromise_fog_utilization = c.objectives.fog_utilization;
        rec.compromise_availability = c.objectives.availability;
        rec.hypervolume = hypervolume_2d(archive_.feasible_objectives());
    }
    if (!population.empty()) {
        const auto ok = std::count_if(population.begin(), population.end(),
                                      [](const Solution& s) { return s.feasible(); });
        rec.feasible_fraction = static_cast<double>(ok) / static_cast<double>(population.size());
    }
    trace_.push_back(rec);
}

RunResult SearchContext::finish() { return {std::move(archive_), std::move(trace_), evaluations_}; }

}  // namespace detail
}  // namespace fogdeploy
