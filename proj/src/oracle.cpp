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

#include "fogdeploy/oracle.hpp"

#include <algorithm>
#include <random>

#include <fmt/core.h>

#include "fogdeploy/error.hpp"

namespace fogdeploy {

std::vector<ObjectiveVector> ExactFront::objective_set() const {
    std::vector<ObjectiveVector> out;
    for (const auto& s : solutions) out.push_back(s.objectives);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<std::uint64_t> search_space_size(const ProblemInstance& prob, std::uint64_t cap) {
    const std::uint64_t radix = prob.resource_count();
    std::uint64_t size = 1;
    for (std::size_t g = 0; g < prob.service_count(); ++g) {
        if (size > cap / radix) return std::nullopt;
        size *= radix;
    }
    if (size > cap) return std::nullopt;
    return size;
}

namespace {

// Keeps feasible points not strictly dominated by another; equal objective
// vectors coexist.
void admit(std::vector<Solution>& front, Solution s) {
    for (const auto& m : front)
        if (pareto_dominates(m.objectives, s.objectives)) return;
    std::erase_if(front, [&](const Solution& m) { return pareto_dominates(s.objectives, m.objectives); });
    front.push_back(std::move(s));
}

Deployment decode(std::uint64_t index, std::size_t genes, std::uint64_t radix) {
    Deployment d;
    d.assignment.resize(genes);
    for (std::size_t g = 0; g < genes; ++g) {
        d.assignment[g] = static_cast<ResourceId>(index % radix);
        index /= radix;
    }
    return d;
}

std::vector<Solution> enumerate_range(const ProblemInstance& prob, std::uint64_t lo, std::uint64_t hi) {
    std::vector<Solution> front;
    if (lo >= hi) return front;
    const std::size_t genes = prob.service_count();
    const auto radix = static_cast<ResourceId>(prob.resource_count());
    Deployment d = decode(lo, genes, static_cast<std::uint64_t>(radix));
    for (std::uint64_t i = lo; i < hi; ++i) {
        const Evaluation e = evaluate(d, prob);
        if (e.violations.feasible()) admit(front, {d, e.objectives, e.violations});
        for (std::size_t g = 0; g < genes; ++g) {  // odometer increment, gene 0 least significant
            if (++d.assignment[g] < radix) break;
            d.assignment[g] = 0;
        }
    }
    return front;
}

}  // namespace

ExactFront exact_pareto(const ProblemInstance& prob, std::uint64_t cap, ExecutionPolicy policy) {
    const auto size = search_space_size(prob, cap);
    if (!size)
        throw Error(ErrorCode::SearchSpaceTooLarge,
                    fmt::format("{}^{} assignments exceed the cap of {}", prob.resource_count(),
                                prob.service_count(), cap));
    ExactFront out;
    out.search_space_size = *size;

    std::vector<Solution> merged;
    if (policy == ExecutionPolicy::Serial) {
        merged = enumerate_range(prob, 0, *size);
    } else {
        constexpr std::uint64_t kChunk = 4096;
        const auto chunks = static_cast<long>((*size + kChunk - 1) / kChunk);
        std::vector<std::vector<Solution>> partial(static_cast<std::size_t>(chunks));
#pragma omp parallel for schedule(dynamic)
        for (long c = 0; c < chunks; ++c) {
            const std::uint64_t lo = static_cast<std::uint64_t>(c) * kChunk;
            partial[static_cast<std::size_t>(c)] = enumerate_range(prob, lo, std::min(*size, lo + kChunk));
        }
        for (auto& chunk : partial)
            for (auto& s : chunk) admit(merged, std::move(s));
    }

    std::sort(merged.begin(), merged.end(), [](const Solution& a, const Solution& b) {
        return a.objectives != b.objectives ? a.objectives < b.objectives : a.genotype < b.genotype;
    });
    out.solutions = std::move(merged);
    return out;
}

double md1_simulate(double arrival_rate, double service_time, std::uint64_t jobs, std::uint64_t seed) {
    if (!(arrival_rate > 0.0) || !(service_time > 0.0))
        throw Error(ErrorCode::InvalidArgument, "simulation needs a positive arrival rate and service time");
    if (jobs < 100'000) throw Error(ErrorCode::InvalidArgument, "simulation needs at least 1e5 jobs");
    if (arrival_rate * service_time >= 1.0)
        throw Error(ErrorCode::Saturated,
                    fmt::format("simulated queue saturated (rho = {})", arrival_rate * service_time));

    std::mt19937_64 rng(seed);
    std::exponential_distribution<double> gap(arrival_rate);
    const std::uint64_t warmup = jobs / 10;
    double arrival = 0.0;
    double departure = 0.0;  // of the previous job
    double sum = 0.0;
    for (std::uint64_t k = 0; k < jobs; ++k) {
        arrival += gap(rng);
        departure = std::max(arrival, departure) + service_time;
        if (k >= warmup) sum += departure - arrival;
    }
    return sum / static_cast<double>(jobs - warmup);
}

}  // namespace fogdeploy
