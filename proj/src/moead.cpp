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

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/core.h>

#include "fogdeploy/error.hpp"
#include "fogdeploy/moea.hpp"
#include "search_context.hpp"

namespace fogdeploy {

std::vector<WeightVector> simplex_lattice(std::size_t resolution) {
    if (resolution == 0) throw Error(ErrorCode::BadLattice, "simplex lattice resolution must be >= 1");
    std::vector<WeightVector> weights;
    weights.reserve(resolution + 1);
    for (std::size_t i = 0; i <= resolution; ++i) {
        const double w = static_cast<double>(i) / static_cast<double>(resolution);
        weights.push_back({w, 1.0 - w});
    }
    return weights;
}

double tchebycheff(const ObjectiveVector& f, const WeightVector& w, const ObjectiveVector& ideal) noexcept {
    return std::max(w.fog * std::abs(ideal.fog_utilization - f.fog_utilization),
                    w.availability * std::abs(ideal.availability - f.availability));
}

namespace {

std::vector<std::vector<std::size_t>> neighborhoods(const std::vector<WeightVector>& weights, std::size_t t) {
    const std::size_t n = weights.size();
    t = std::min(t, n);
    std::vector<std::vector<std::size_t>> out(n);
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto dist = [&](std::size_t j) {
            const double a = weights[i].fog - weights[j].fog;
            const double b = weights[i].availability - weights[j].availability;
            return a * a + b * b;
        };
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return dist(a) < dist(b); });
        out[i].assign(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(t));
    }
    return out;
}

void raise_ideal(ObjectiveVector& ideal, const ObjectiveVector& f) {
    ideal.fog_utilization = std::max(ideal.fog_utilization, f.fog_utilization);
    ideal.availability = std::max(ideal.availability, f.availability);
}

// Feasibility-first replacement test for subproblem `w`.
bool improves(const Solution& child, const Solution& incumbent, const WeightVector& w, const ObjectiveVector& ideal) {
    if (child.feasible() != incumbent.feasible()) return child.feasible();
    if (!child.feasible()) return child.violations.total() < incumbent.violations.total();
    return tchebycheff(child.objectives, w, ideal) < tchebycheff(incumbent.objectives, w, ideal);
}

}  // namespace

RunResult moead_run(const ProblemInstance& prob, const AlgoParams& params) {
    detail::SearchContext ctx(prob, params);
    const std::size_t h = params.moead.lattice_resolution == 0 ? params.population_size - 1
                                                               : params.moead.lattice_resolution;
    const auto weights = simplex_lattice(h);
    if (weights.size() < params.population_size)
        throw Error(ErrorCode::BadLattice, fmt::format("lattice resolution {} yields {} weight vectors, need >= {}", h,
                                                       weights.size(), params.population_size));
    const std::size_t n = weights.size();
    const auto hood = neighborhoods(weights, params.moead.neighborhood_size);
    const double pc = params.nsga2.crossover_probability;
    const double pm = ctx.mutation_probability();

    std::vector<Solution> pop = ctx.evaluate(ctx.initial_population(n));
    ObjectiveVector ideal = pop.front().objectives;
    for (const auto& s : pop) raise_ideal(ideal, s.objectives);
    ctx.record(pop);

    // Synchronous generations: one child per subproblem is bred from the
    // current population, the batch is evaluated together, then ideal-point
    // and neighbor updates run in subproblem order.
    while (ctx.remaining() > 0 && !pop.empty()) {
        const std::size_t active = std::min(n, ctx.remaining());
        std::vector<Deployment> children;
        children.reserve(active);
        for (std::size_t i = 0; i < active; ++i) {
            const auto& b = hood[i];
            const std::size_t k = ctx.random_index(b.size());
            std::size_t l = ctx.random_index(b.size() - 1);
            if (l >= k) ++l;
            Deployment x = pop[b[k]].genotype;
            Deployment y = pop[b[l]].genotype;
            if (ctx.uniform01() < pc) ctx.uniform_crossover(x, y);
            ctx.reset_mutation(x, pm);
            children.push_back(std::move(x));
        }
        const auto evaluated = ctx.evaluate(std::move(children));
        for (std::size_t i = 0; i < evaluated.size(); ++i) {
            const Solution& child = evaluated[i];
            raise_ideal(ideal, child.objectives);
            for (std::size_t j : hood[i])
                if (improves(child, pop[j], weights[j], ideal)) pop[j] = child;
        }
        ctx.record(pop);
    }
    return ctx.finish();
}

}  // namespace fogdeploy
