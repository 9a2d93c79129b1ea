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
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace fogdeploy {

using ResourceId = int;
using ColonyId = int;

enum class ResourceKind { Cloud, FCM, FC };

struct Resource {
    ResourceId id = 0;
    ResourceKind kind = ResourceKind::FC;
    double cpu_capacity = 0.0;
    double ram_capacity = 0.0;      // MB
    double storage_capacity = 0.0;
    double failure_probability = 0.0;
    std::optional<ColonyId> colony_id;

    double up_probability() const noexcept { return 1.0 - failure_probability; }
};

struct Colony {
    ColonyId id = 0;
    ResourceId fcm = 0;
    std::vector<ResourceId> cells;
    double cell_latency_ms = 2.0;                  // FC <-> own FCM
    std::map<ColonyId, double> neighbor_latency_ms;  // FCM <-> neighbor FCM
};

/// Immutable resource topology: one cloud node plus colonies of one FCM and
/// any number of FCs. Validated on construction.
class Landscape {
public:
    Landscape() = default;
    Landscape(std::vector<Resource> resources, std::vector<Colony> colonies,
              std::map<ColonyId, double> cloud_latency_ms);

    std::span<const Resource> resources() const noexcept { return resources_; }
    std::span<const Colony> colonies() const noexcept { return colonies_; }
    std::size_t resource_count() const noexcept { return resources_.size(); }
    std::size_t colony_count() const noexcept { return colonies_.size(); }

    ResourceId cloud() const noexcept { return cloud_; }
    const Resource& resource(ResourceId id) const;
    const Colony& colony(ColonyId id) const;
    double cloud_latency_ms(ColonyId id) const;

    /// One-way network latency between two hosts in seconds. Traffic between
    /// cells travels through colony managers; colonies without a declared
    /// neighbor link are bridged through the cloud.
    double latency_s(ResourceId from, ResourceId to) const;

private:
    double hop_to_manager_ms(const Resource& r) const;

    std::vector<Resource> resources_;
    std::vector<Colony> colonies_;
    std::map<ColonyId, double> cloud_latency_ms_;
    ResourceId cloud_ = 0;
};

enum class ServiceKind { Sense, Process, Actuate };

std::string_view to_string(ServiceKind kind) noexcept;

struct ServiceId {
    int app = 0;
    int index = 0;

    friend bool operator==(const ServiceId&, const ServiceId&) = default;
};

struct Service {
    ServiceId id;
    double workload_cpu = 0.0;
    double ram_req = 0.0;
    double storage_req = 0.0;
    double availability_req = 0.0;
    ServiceKind kind = ServiceKind::Process;
};

struct Application {
    int id = 0;
    std::vector<Service> services;
    std::vector<std::pair<int, int>> edges;  // (from, to) service indices
    double deadline_s = 0.0;
    double request_rate = 0.0;               // requests per second
    ColonyId source_colony = 0;
};

/// Throws Error{CycleDetected} (message names one cycle) or
/// Error{DanglingEdge}.
void validate_dag(const Application& app);

/// Services of `app` in a topological order of its edge relation.
std::vector<int> topological_order(const Application& app);

enum class Tier { FCM, FC, NFC, Cloud };

std::string_view to_string(Tier tier) noexcept;

Tier tier_of(const Landscape& landscape, ResourceId resource, ColonyId source_colony);

/// Neighbor colonies of `colony` ordered by
/// w_latency * normalized latency + w_failure * FCM failure probability,
/// ascending, ties by colony id.
std::vector<ColonyId> rank_neighbors(const Landscape& landscape, ColonyId colony,
                                     double w_latency = 0.5, double w_failure = 0.5);

}  // namespace fogdeploy
