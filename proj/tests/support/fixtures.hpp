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
#include <optional>
#include <random>
#include <vector>

#include "fogdeploy/error.hpp"
#include "fogdeploy/fsdp.hpp"
#include "fogdeploy/moea.hpp"
#include "fogdeploy/model.hpp"

namespace fogdeploy::testing {

/// Code of the fogdeploy::Error thrown by `fn`, or nullopt if none.
template <class Fn>
std::optional<ErrorCode> error_code_of(Fn&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return std::nullopt;
}

/// Cloud (id 0); colony 0 = FCM 1 + FCs 2, 3; colony 1 = FCM 4 + FCs 5, 6.
/// Capacities and failure probabilities follow the default scenario tables.
/// Latencies: cell 2 ms, neighbor 10 ms, cloud 100 ms, unless `zero_latency`.
Landscape two_colony_landscape(bool zero_latency = false);

Service make_service(int app, int index, double cpu, double availability_req, double ram = 10.0,
                     double storage = 10.0);

/// Linear chain over `services`.
Application make_chain(int id, std::vector<Service> services, double deadline_s, double request_rate,
                       ColonyId source = 0);

/// Random instance with at most 6 services and at most 4 resources (cloud,
/// one FCM, up to two FCs); the all-cloud deployment is always feasible and
/// the search space never exceeds 4^6 = 4096.
ProblemInstance random_tiny_instance(std::mt19937_64& rng);

/// Random deployment over all resources of `prob`.
Deployment random_deployment(const ProblemInstance& prob, std::mt19937_64& rng);

/// Solution with objectives on a coarse grid (to provoke ties) and a 50%
/// chance of being infeasible. The genotype is empty.
Solution random_graded_solution(std::mt19937_64& rng);

/// Constrained dominance written straight from its definition; kept apart
/// from the library version so each checks the other.
bool naive_constrained_dominates(const Solution& a, const Solution& b);

/// Objective vectors of the feasible non-dominated assignments, found by
/// recursive enumeration and a quadratic dominance filter. Sorted, unique.
std::vector<ObjectiveVector> brute_force_front(const ProblemInstance& prob);

/// Fronts by repeated peeling with `naive_constrained_dominates`.
std::vector<std::vector<std::size_t>> brute_force_fronts(const std::vector<Solution>& pop);

}  // namespace fogdeploy::testing
