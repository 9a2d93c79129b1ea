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
#include <span>
#include <vector>

#include "fogdeploy/model.hpp"

namespace fogdeploy {

/// Genotype: one hosting resource per service, indexed by global service
/// index (apps in order, services in order within each app). Exclusive
/// single-host placement holds by construction.
struct Deployment {
    std::vector<ResourceId> assignment;

    std::size_t size() const noexcept { return assignment.size(); }
    friend bool operator==(const Deployment&, const Deployment&) = default;
    friend auto operator<=>(const Deployment&, const Deployment&) = default;
};

/// Both components are maximized and lie in [0,1].
struct ObjectiveVector {
    double fog_utilization = 0.0;
    double availability = 0.0;

    friend bool operator==(const ObjectiveVector&, const ObjectiveVector&) = default;
    friend auto operator<=>(const ObjectiveVector&, const ObjectiveVector&) = default;
};

struct CapacityExcess {
    double cpu = 0.0;
    double ram = 0.0;
    double storage = 0.0;
};

struct ViolationVector {
    double cpu_excess = 0.0;
    double ram_excess = 0.0;
    double storage_excess = 0.0;
    double deadline_excess = 0.0;

    double total() const noexcept { return cpu_excess + ram_excess + storage_excess + deadline_excess; }
    bool feasible() const noexcept {
        return cpu_excess == 0.0 && ram_excess == 0.0 && storage_excess == 0.0 && deadline_excess == 0.0;
    }
    friend bool operator==(const ViolationVector&, const ViolationVector&) = default;
};

struct Evaluation {
    ObjectiveVector objectives;
    ViolationVector violations;

    friend bool operator==(const Evaluation&, const Evaluation&) = default;
};

/// Deadline excess charged to an app whose path crosses a saturated queue.
inline constexpr double kSaturationPenalty = 10.0;

inline constexpr double kDefaultReserveFraction = 0.1;

class ProblemInstance {
public:
    ProblemInstance() = default;
    ProblemInstance(Landscape landscape, std::vector<Application> apps,
                    double reserve_fraction = kDefaultReserveFraction);

    const Landscape& landscape() const noexcept { return landscape_; }
    std::span<const Application> apps() const noexcept { return apps_; }
    const Application& app(std::size_t i) const { return apps_.at(i); }
    double reserve_fraction() const noexcept { return reserve_fraction_; }

    /// N, the total number of service instances.
    std::size_t service_count() const noexcept { return owner_.size(); }
    std::size_t resource_count() const noexcept { return landscape_.resource_count(); }

    const Service& service(std::size_t global) const;
    std::size_t app_of(std::size_t global) const { return owner_.at(global); }
    std::size_t global_index(std::size_t app, std::size_t service) const {
        return offset_.at(app) + service;
    }
    /// Per-app topological orders, computed once at construction.
    const std::vector<int>& order(std::size_t app) const { return orders_.at(app); }

    /// (1 - c) * capacity.
    double effective_cpu(ResourceId r) const;
    double effective_ram(ResourceId r) const;
    double effective_storage(ResourceId r) const;

    Deployment all_on(ResourceId r) const { return {std::vector<ResourceId>(service_count(), r)}; }

private:
    Landscape landscape_;
    std::vector<Application> apps_;
    double reserve_fraction_ = kDefaultReserveFraction;
    std::vector<std::size_t> owner_;
    std::vector<std::size_t> offset_;
    std::vector<std::vector<int>> orders_;
};

/// Throws Error{LengthMismatch} or Error{UnknownResource}.
void check_deployment(const Deployment& dep, const ProblemInstance& prob);

double fog_utilization(const Deployment& dep, const ProblemInstance& prob);

int service_availability_score(const Service& s, const Resource& r) noexcept;

/// Sum over apps of the per-app mean availability score, unnormalized
/// (ranges over [0, m]).
double raw_availability(const Deployment& dep, const ProblemInstance& prob);

/// raw_availability / m, in [0,1].
double availability_objective(const Deployment& dep, const ProblemInstance& prob);

CapacityExcess capacity_violation(const Deployment& dep, const ProblemInstance& prob);

double deadline_violation(const Deployment& dep, const ProblemInstance& prob);

Evaluation evaluate(const Deployment& dep, const ProblemInstance& prob);

bool is_feasible(const Deployment& dep, const ProblemInstance& prob);

struct CapacityBreach {
    ResourceId resource = 0;
    enum class Dimension { Cpu, Ram, Storage } dimension = Dimension::Cpu;
    double load = 0.0;
    double limit = 0.0;
};

/// Direct per-resource check of the capacity inequalities, independent of
/// the aggregated violation vector.
std::vector<CapacityBreach> audit_capacity(const Deployment& dep, const ProblemInstance& prob);

}  // namespace fogdeploy
