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
#include <numeric>

#include "fogdeploy/moea.hpp"
#include "search_context.hpp"

namespace fogdeploy {

namespace {

struct Ranking {
    std::vector<std::size_t> rank;
    std::vector<double> crowding;
};

Ranking rank_population(std::span<const Solution> pop,
                        const std::vector<std::vector<std::size_t>>& fronts) {
    Ranking r{std::vector<std::size_t>(pop.size()), std::vector<double>(pop.size())};
    for (std::size_t f = 0; f < fronts.size(); ++f) {
        std::vector<ObjectiveVector> objs;
        objs.reserve(fronts[f].size());
        for (std::size_t i : fronts[f]) objs.push_back(pop[i].objectives);
        const auto dist = crowding_distance(objs);
        for (std::size_t k = 0; k < fronts[f].size(); ++k) {
            r.rank[fronts[f][k]] = f;
            r.crowding[fronts[f][k]] = dist[k];
        }
    }
    return r;
}

// Crowded comparison: lower rank wins, then larger crowding distance.
std::size_t tournament(detail::SearchContext& ctx, const Ranking& r) {
    const std::size_t n = r.rank.size();
    const std::size_t a = ctx.random_index(n);
    std::size_t b = ctx.random_index(n - 1);
    if (b >= a) ++b;
    if (r.rank[a] != r.rank[b]) return r.rank[a] < r.rank[b] ? a : b;
    return r.crowding[b] > r.crowding[a] ? b : a;
}

// Elitist survival over parents + offspring: whole fronts first, the
// splitting front by descending crowding distance.
std::vector<Solution> survive(std::vector<Solution> merged, std::size_t size) {
    const auto fronts = fast_nondominated_sort(merged);
    std::vector<Solution> next;
    next.reserve(size);
    for (const auto& front : fronts) {
        if (next.size() + front.size() <= size) {
            for (std::size_t i : front) next.push_back(merged[i]);
            if (next.size() == size) break;
            continue;
        }
        std::vector<ObjectiveVector> objs;
        for (std::size_t i : front) objs.push_back(merged[i].objectives);
        const auto dist = crowding_distance(objs);
        std::vector<std::size_t> order(front.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return dist[a] > dist[b]; });
        for (std::size_t k = 0; next.size() < size; ++k) next.push_back(merged[front[order[k]]]);
        break;
    }
    return next;
}

}  // namespace

RunResult nsga2_run(const ProblemInstance& prob, const AlgoParams& params) {
    detail::SearchContext ctx(prob, params);
    const std::size_t pop_size = params.population_size;
    const double pc = params.nsga2.crossover_probability;
    const double pm = ctx.mutation_probability();

    std::vector<Solution> pop = ctx.evaluate(ctx.initial_population(pop_size));
    ctx.record(pop);

    while (ctx.remaining() > 0) {
        const Ranking ranking = rank_population(pop, fast_nondominated_sort(pop));
        const std::size_t brood = std::min(pop_size, ctx.remaining());
        std::vector<Deployment> offspring;
        offspring.reserve(brood + 1);
        while (offspring.size() < brood) {
            Deployment a = pop[tournament(ctx, ranking)].genotype;
            Deployment b = pop[tournament(ctx, ranking)].genotype;
            if (ctx.uniform01() < pc) ctx.uniform_crossover(a, b);
            ctx.reset_mutation(a, pm);
            ctx.reset_mutation(b, pm);
            offspring.push_back(std::move(a));
            offspring.push_back(std::move(b));
        }
        offspring.resize(brood);

        std::vector<Solution> merged = std::move(pop);
        for (auto& child : ctx.evaluate(std::move(offspring))) merged.push_back(std::move(child));
        pop = survive(std::move(merged), pop_size);
        ctx.record(pop);
    }
    return ctx.finish();
}

}  // namespace fogdeploy
