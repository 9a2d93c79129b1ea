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
#include <vector>

#include "fogdeploy/moea.hpp"
#include "fogdeploy/parallel.hpp"

namespace fogdeploy {

inline constexpr std::uint64_t kDefaultSearchCap = 1'000'000;

struct ExactFront {
    /// Every feasible non-dominated assignment, sorted by objectives then
    /// genotype. Distinct genotypes may share an objective vector.
    std::vector<Solution> solutions;
    std::uint64_t search_space_size = 0;

    /// Distinct objective vectors, ascending.
    std::vector<ObjectiveVector> objective_set() const;
};

/// R^N, or nullopt when it exceeds `cap`.
std::optional<std::uint64_t> search_space_size(const ProblemInstance& prob, std::uint64_t cap);

/// Exhaustive enumeration of all R^N assignments in mixed-radix order.
/// Throws Error{SearchSpaceTooLarge} before allocating anything.
ExactFront exact_pareto(const ProblemInstance& prob, std::uint64_t cap = kDefaultSearchCap,
                        ExecutionPolicy policy = ExecutionPolicy::Parallel);

/// Event-driven FIFO single-server simulation with exponential
/// interarrivals and deterministic service. Returns the mean sojourn after
/// discarding the first 10% of jobs.
double md1_simulate(double arrival_rate, double service_time, std::uint64_t jobs, std::uint64_t seed);

}  // namespace fogdeploy
