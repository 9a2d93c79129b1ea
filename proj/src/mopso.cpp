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
#include <map>

#include "fogdeploy/moea.hpp"
#include "search_context.hpp"

namespace fogdeploy {

namespace {

// Positions live in [0, R) and decode by floor; the upper clamp stays this
// far below R so the decode never yields an out-of-range id.
constexpr double kClampEpsilon = 1e-9;

struct Particle {
    std::vector<double> position;
    std::vector<double> velocity;
    std::vector<double> best_position;
    Solution best;
};

Deployment decode(const std::vector<double>& position) {
    Deployment d;
    d.assignment.reserve(position.size());
    for (double x : position) d.assignment.push_back(static_cast<ResourceId>(std::floor(x)));
    return d;
}

// Adaptive hypercube grid over the archive's objective bounds. A cell is
// chosen by roulette with fitness 10 / occupancy, then a member uniformly
// from that cell.
const Solution& select_leader(detail::SearchContext& ctx, const ParetoArchive& archive, int divisions) {
    const auto members = archive.members();
    double lo[2] = {members[0].objectives.fog_utilization, members[0].objectives.availability};
    double hi[2] = {lo[0], lo[1]};
    for (const auto& m : members) {
        const double f[2] = {m.objectives.fog_utilization, m.objectives.availability};
        for (int k = 0; k < 2; ++k) {
            lo[k] = std::min(lo[k], f[k]);
            hi[k] = std::max(hi[k], f[k]);
        }
    }
    auto cell_of = [&](const ObjectiveVector& o) {
        const double f[2] = {o.fog_utilization, o.availability};
        int idx[2] = {0, 0};
        for (int k = 0; k < 2; ++k) {
            if (hi[k] > lo[k])
                idx[k] = std::min(divisions - 1, static_cast<int>((f[k] - lo[k]) / (hi[k] - lo[k]) * divisions));
        }
        return idx[0] * divisions + idx[1];
    };

    std::map<int, std::vector<std::size_t>> cells;
    for (std::size_t i = 0; i < members.size(); ++i) cells[cell_of(members[i].objectives)].push_back(i);

    double total = 0.0;
    for (const auto& [cell, occupants] : cells) total += 10.0 / static_cast<double>(occupants.size());
    double pick = ctx.uniform01() * total;
    const std::vector<std::size_t>* chosen = &cells.rbegin()->second;
    for (const auto& [cell, occupants] : cells) {
        pick -= 10.0 / static_cast<double>(occupants.size());
        if (pick < 0.0) {
            chosen = &occupants;
            break;
        }
    }
    return members[(*chosen)[ctx.random_index(chosen->size())]];
}

}  // namespace

RunResult mopso_run(const ProblemInstance& prob, const AlgoParams& params) {
    detail::SearchContext ctx(prob, params);
    const MopsoParams& mp = params.mopso;
    const std::size_t swarm_size = params.population_size;
    const std::size_t dims = ctx.genes();
    const double upper = static_cast<double>(ctx.resources()) - kClampEpsilon;

    std::vector<Particle> swarm(swarm_size);
    std::vector<Deployment> start;
    start.reserve(swarm_size);
    for (std::size_t i = 0; i < swarm_size; ++i) {
        Particle& p = swarm[i];
        p.velocity.assign(dims, 0.0);
        p.position.resize(dims);
        for (double& x : p.position)
            x = i == 0 ? static_cast<double>(prob.landscape().cloud()) + 0.5 : ctx.uniform01() * upper;
        start.push_back(decode(p.position));
    }
    std::vector<Solution> current = ctx.evaluate(std::move(start));
    for (std::size_t i = 0; i < swarm_size; ++i) {
        swarm[i].best_position = swarm[i].position;
        swarm[i].best = current[i];
    }
    ctx.record(current);

    // Leaders come from the run's external archive, which always holds at
    // least the initial non-dominated set.
    while (ctx.remaining() > 0) {
        const std::size_t active = std::min(swarm_size, ctx.remaining());
        std::vector<Deployment> moved;
        moved.reserve(active);
        for (std::size_t i = 0; i < active; ++i) {
            Particle& p = swarm[i];
            const Solution& leader = select_leader(ctx, ctx.archive(), mp.grid_divisions);
            for (std::size_t d = 0; d < dims; ++d) {
                const double r1 = ctx.uniform01();
                const double r2 = ctx.uniform01();
                const double guide = static_cast<double>(leader.genotype.assignment[d]) + 0.5;
                double& v = p.velocity[d];
                double& x = p.position[d];
                v = mp.inertia * v + mp.cognitive * r1 * (p.best_position[d] - x) + mp.social * r2 * (guide - x);
                v = std::clamp(v, -upper, upper);
                x += v;
                if (x < 0.0) {
                    x = 0.0;
                    v = -v;
                } else if (x > upper) {
                    x = upper;
                    v = -v;
                }
            }
            if (mp.mutation_rate > 0.0 && ctx.uniform01() < mp.mutation_rate) {
                const std::size_t d = ctx.random_index(dims);
                p.position[d] = ctx.uniform01() * upper;
                p.velocity[d] = 0.0;
            }
            moved.push_back(decode(p.position));
        }

        auto results = ctx.evaluate(std::move(moved));
        for (std::size_t i = 0; i < active; ++i) {
            Particle& p = swarm[i];
            const Solution& now = results[i];
            const bool replace = constrained_dominates(now, p.best) ||
                                 (!constrained_dominates(p.best, now) && ctx.uniform01() < 0.5);
            if (replace) {
                p.best_position = p.position;
                p.best = now;
            }
            current[i] = std::move(results[i]);
        }
        ctx.record(current);
    }
    return ctx.finish();
}

}  // namespace fogdeploy
