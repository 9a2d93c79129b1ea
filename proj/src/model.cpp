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

#include "fogdeploy/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include <fmt/core.h>
#include <fmt/format.h>

#include "fogdeploy/error.hpp"

namespace fogdeploy {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::CycleDetected: return "CycleDetected";
        case ErrorCode::DanglingEdge: return "DanglingEdge";
        case ErrorCode::UnknownResource: return "UnknownResource";
        case ErrorCode::UnknownColony: return "UnknownColony";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::Saturated: return "Saturated";
        case ErrorCode::BudgetTooSmall: return "BudgetTooSmall";
        case ErrorCode::BadLattice: return "BadLattice";
        case ErrorCode::EmptyFront: return "EmptyFront";
        case ErrorCode::EmptyArchive: return "EmptyArchive";
        case ErrorCode::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::UnknownVersion: return "UnknownVersion";
    }
    return "Unknown";
}

std::string_view to_string(ServiceKind kind) noexcept {
    switch (kind) {
        case ServiceKind::Sense: return "Sense";
        case ServiceKind::Process: return "Process";
        case ServiceKind::Actuate: return "Actuate";
    }
    return "Unknown";
}

std::string_view to_string(Tier tier) noexcept {
    switch (tier) {
        case Tier::FCM: return "FCM";
        case Tier::FC: return "FC";
        case Tier::NFC: return "NFC";
        case Tier::Cloud: return "CLOUD";
    }
    return "Unknown";
}

namespace {

[[noreturn]] void invalid(const std::string& what) {
    throw Error(ErrorCode::InvalidArgument, what);
}

void check_resource(const Resource& r, std::size_t index) {
    if (r.id != static_cast<ResourceId>(index))
        invalid(fmt::format("resource ids must be contiguous from 0 (slot {} has id {})", index, r.id));
    if (!(r.cpu_capacity > 0.0) || !(r.ram_capacity > 0.0) || !(r.storage_capacity > 0.0))
        invalid(fmt::format("resource {} must have positive capacities", r.id));
    if (!(r.failure_probability >= 0.0 && r.failure_probability <= 1.0))
        invalid(fmt::format("resource {} failure probability {} outside [0,1]", r.id,
                            r.failure_probability));
    if ((r.kind == ResourceKind::Cloud) == r.colony_id.has_value())
        invalid(fmt::format("resource {}: only the cloud may lack a colony", r.id));
}

}  // namespace

Landscape::Landscape(std::vector<Resource> resources, std::vector<Colony> colonies,
                     std::map<ColonyId, double> cloud_latency_ms)
    : resources_(std::move(resources)),
      colonies_(std::move(colonies)),
      cloud_latency_ms_(std::move(cloud_latency_ms)) {
    int clouds = 0;
    for (std::size_t i = 0; i < resources_.size(); ++i) {
        check_resource(resources_[i], i);
        if (resources_[i].kind == ResourceKind::Cloud) {
            cloud_ = resources_[i].id;
            ++clouds;
        }
    }
    if (clouds != 1) invalid(fmt::format("landscape needs exactly one cloud, got {}", clouds));

    std::vector<int> listed(resources_.size(), 0);
    auto member = [&](ResourceId id, ColonyId colony, ResourceKind kind) {
        if (id < 0 || static_cast<std::size_t>(id) >= resources_.size())
            throw Error(ErrorCode::UnknownResource,
                        fmt::format("colony {} references unknown resource {}", colony, id));
        const Resource& r = resources_[static_cast<std::size_t>(id)];
        if (r.kind != kind || r.colony_id != colony)
            invalid(fmt::format("resource {} does not match its role in colony {}", id, colony));
        ++listed[static_cast<std::size_t>(id)];
    };
    for (std::size_t c = 0; c < colonies_.size(); ++c) {
        const Colony& col = colonies_[c];
        if (col.id != static_cast<ColonyId>(c))
            invalid(fmt::format("colony ids must be contiguous from 0 (slot {} has id {})", c, col.id));
        member(col.fcm, col.id, ResourceKind::FCM);
        for (ResourceId cell : col.cells) member(cell, col.id, ResourceKind::FC);
        if (!(col.cell_latency_ms >= 0.0)) invalid(fmt::format("colony {} cell latency < 0", col.id));
        for (const auto& [other, ms] : col.neighbor_latency_ms) {
            if (other == col.id) invalid(fmt::format("colony {} lists itself as a neighbor", col.id));
            if (other < 0 || static_cast<std::size_t>(other) >= colonies_.size())
                throw Error(ErrorCode::UnknownColony,
                            fmt::format("colony {} has unknown neighbor {}", col.id, other));
            if (!(ms >= 0.0)) invalid(fmt::format("colony {} neighbor latency < 0", col.id));
        }
    }
    for (const Resource& r : resources_) {
        if (r.kind != ResourceKind::Cloud && listed[static_cast<std::size_t>(r.id)] != 1)
            invalid(fmt::format("fog resource {} must belong to exactly one colony", r.id));
    }
    for (const auto& [colony, ms] : cloud_latency_ms_) {
        if (colony < 0 || static_cast<std::size_t>(colony) >= colonies_.size())
            throw Error(ErrorCode::UnknownColony, fmt::format("cloud latency for unknown colony {}", colony));
        if (!(ms >= 0.0)) invalid(fmt::format("cloud latency of colony {} < 0", colony));
    }
}

const Resource& Landscape::resource(ResourceId id) const {
    if (id < 0 || static_cast<std::size_t>(id) >= resources_.size())
        throw Error(ErrorCode::UnknownResource, fmt::format("unknown resource {}", id));
    return resources_[static_cast<std::size_t>(id)];
}

const Colony& Landscape::colony(ColonyId id) const {
    if (id < 0 || static_cast<std::size_t>(id) >= colonies_.size())
        throw Error(ErrorCode::UnknownColony, fmt::format("unknown colony {}", id));
    return colonies_[static_cast<std::size_t>(id)];
}

double Landscape::cloud_latency_ms(ColonyId id) const {
    colony(id);
    auto it = cloud_latency_ms_.find(id);
    return it == cloud_latency_ms_.end() ? 0.0 : it->second;
}

double Landscape::hop_to_manager_ms(const Resource& r) const {
    if (r.kind != ResourceKind::FC) return 0.0;
    return colonies_[static_cast<std::size_t>(*r.colony_id)].cell_latency_ms;
}

double Landscape::latency_s(ResourceId from, ResourceId to) const {
    if (from == to) return 0.0;
    const Resource& a = resource(from);
    const Resource& b = resource(to);
    double ms = hop_to_manager_ms(a) + hop_to_manager_ms(b);
    if (a.kind == ResourceKind::Cloud) {
        ms += cloud_latency_ms(*b.colony_id);
    } else if (b.kind == ResourceKind::Cloud) {
        ms += cloud_latency_ms(*a.colony_id);
    } else if (*a.colony_id != *b.colony_id) {
        const Colony& ca = colony(*a.colony_id);
        auto it = ca.neighbor_latency_ms.find(*b.colony_id);
        if (it != ca.neighbor_latency_ms.end()) {
            ms += it->second;
        } else {
            ms += cloud_latency_ms(*a.colony_id) + cloud_latency_ms(*b.colony_id);
        }
    }
    return ms / 1000.0;
}

void validate_dag(const Application& app) {
    const int n = static_cast<int>(app.services.size());
    std::vector<std::vector<int>> succ(static_cast<std::size_t>(n));
    for (const auto& [from, to] : app.edges) {
        if (from < 0 || from >= n || to < 0 || to >= n)
            throw Error(ErrorCode::DanglingEdge,
                        fmt::format("app {}: edge ({}, {}) references a missing service", app.id, from, to));
        succ[static_cast<std::size_t>(from)].push_back(to);
    }

    // Iterative three-colour DFS; the grey path is the cycle witness.
    enum : char { White, Grey, Black };
    std::vector<char> colour(static_cast<std::size_t>(n), White);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    for (int root = 0; root < n; ++root) {
        if (colour[static_cast<std::size_t>(root)] != White) continue;
        std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
        colour[static_cast<std::size_t>(root)] = Grey;
        while (!stack.empty()) {
            auto& [node, next] = stack.back();
            const auto& out = succ[static_cast<std::size_t>(node)];
            if (next == out.size()) {
                colour[static_cast<std::size_t>(node)] = Black;
                stack.pop_back();
                continue;
            }
            const int child = out[next++];
            if (colour[static_cast<std::size_t>(child)] == Grey) {
                std::vector<int> cycle{child};
                for (int v = node; v != child; v = parent[static_cast<std::size_t>(v)]) cycle.push_back(v);
                cycle.push_back(child);
                std::reverse(cycle.begin() + 1, cycle.end() - 1);
                throw Error(ErrorCode::CycleDetected,
                            fmt::format("app {}: cycle {}", app.id, fmt::join(cycle, " -> ")));
            }
            if (colour[static_cast<std::size_t>(child)] == White) {
                colour[static_cast<std::size_t>(child)] = Grey;
                parent[static_cast<std::size_t>(child)] = node;
                stack.emplace_back(child, 0);
            }
        }
    }
}

std::vector<int> topological_order(const Application& app) {
    validate_dag(app);
    const std::size_t n = app.services.size();
    std::vector<std::vector<int>> succ(n);
    std::vector<int> indegree(n, 0);
    for (const auto& [from, to] : app.edges) {
        succ[static_cast<std::size_t>(from)].push_back(to);
        ++indegree[static_cast<std::size_t>(to)];
    }
    std::vector<int> order;
    order.reserve(n);
    for (std::size_t v = 0; v < n; ++v)
        if (indegree[v] == 0) order.push_back(static_cast<int>(v));
    for (std::size_t head = 0; head < order.size(); ++head) {
        for (int next : succ[static_cast<std::size_t>(order[head])])
            if (--indegree[static_cast<std::size_t>(next)] == 0) order.push_back(next);
    }
    return order;
}

Tier tier_of(const Landscape& landscape, ResourceId resource, ColonyId source_colony) {
    const Resource& r = landscape.resource(resource);
    const Colony& source = landscape.colony(source_colony);
    if (r.kind == ResourceKind::Cloud) return Tier::Cloud;
    if (*r.colony_id != source.id) return Tier::NFC;
    return r.kind == ResourceKind::FCM ? Tier::FCM : Tier::FC;
}

std::vector<ColonyId> rank_neighbors(const Landscape& landscape, ColonyId colony, double w_latency,
                                     double w_failure) {
    const Colony& self = landscape.colony(colony);
    if (!(w_latency >= 0.0) || !(w_failure >= 0.0) || (w_latency == 0.0 && w_failure == 0.0))
        invalid("neighbor ranking weights must be non-negative and not both zero");
    if (self.neighbor_latency_ms.empty()) return {};

    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const auto& [id, ms] : self.neighbor_latency_ms) {
        lo = std::min(lo, ms);
        hi = std::max(hi, ms);
    }
    const double span = hi - lo;

    std::vector<std::pair<double, ColonyId>> scored;
    for (const auto& [id, ms] : self.neighbor_latency_ms) {
        const double latency = span > 0.0 ? (ms - lo) / span : 0.0;
        const double failure = landscape.resource(landscape.colony(id).fcm).failure_probability;
        scored.emplace_back(w_latency * latency + w_failure * failure, id);
    }
    std::sort(scored.begin(), scored.end());
    std::vector<ColonyId> out;
    out.reserve(scored.size());
    for (const auto& entry : scored) out.push_back(entry.second);
    return out;
}

}  // namespace fogdeploy
