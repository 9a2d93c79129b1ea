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

#include <cstddef>
#include <optional>
#include <vector>

#include "fogdeploy/fsdp.hpp"

namespace fogdeploy {

/// Single-server queue, Poisson arrivals, deterministic service time.
struct Md1Queue {
    double arrival_rate = 0.0;  // jobs per second
    double service_time = 1.0;  // seconds

    double utilization() const noexcept { return arrival_rate * service_time; }
};

/// Mean sojourn (wait + service) from the Pollaczek-Khinchine formula.
/// Throws Error{Saturated} when utilization >= 1.
double md1_sojourn(const Md1Queue& q);

struct ResourceLoad {
    double arrival_rate = 0.0;
    double service_time = 0.0;  // 0 when the resource hosts nothing
    double utilization = 0.0;
    std::size_t hosted = 0;

    bool saturated() const noexcept { return utilization >= 1.0; }
};

ResourceLoad resource_load(const Deployment& dep, const ProblemInstance& prob, ResourceId r);

/// Loads of every resource in one pass over the genotype.
std::vector<ResourceLoad> resource_loads(const Deployment& dep, const ProblemInstance& prob);

/// Critical-path response time of one application in seconds; nullopt when
/// any of its services sits on a saturated queue.
std::optional<double> response_time(const Deployment& dep, const ProblemInstance& prob,
                                    std::size_t app);

/// Same as above with loads precomputed by `resource_loads`.
std::optional<double> response_time(const Deployment& dep, const ProblemInstance& prob,
                                    std::size_t app, const std::vector<ResourceLoad>& loads);

struct ResponseTimeReport {
    std::vector<std::optional<double>> app_response_s;
    std::vector<ResourceLoad> loads;
};

ResponseTimeReport timing_report(const Deployment& dep, const ProblemInstance& prob);

}  // namespace fogdeploy
