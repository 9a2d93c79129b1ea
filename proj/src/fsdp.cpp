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

#include "fogdeploy/fsdp.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include <fmt/core.h>

#include "fogdeploy/error.hpp"
#include "fogdeploy/timing.hpp"

namespace fogdeploy {

ProblemInstance::ProblemInstance(Landscape landscape, std::vector<Application> apps,
                                 double reserve_fraction)
    : landscape_(std::move(landscape)), apps_(std::move(apps)), reserve_fraction_(reserve_fraction) {
    if (!(reserve_fraction_ >= 0.0 && reserve_fraction_ < 1.0))
        throw Error(ErrorCode::InvalidArgument,
                    fmt::format("reserve fraction {} outside [0,1)", reserve_fraction_));
    for (std::size_t i = 0; i < apps_.size(); ++i) {
        const Application& app = apps_[i];
        if (!(app.deadline_s > 0.0) || !(app.request_rate > 0.0))
            throw Error(ErrorCode::InvalidArgument,
                        fmt::format("app {} needs a positive deadline and request rate", app.id));
        landscape_.colony(app.source_colony);
        for (const Service& s : app.services) {
            if (!(s.workload_cpu > 0.0) || !(s.ram_req > 0.0) || !(s.storage_req > 0.0))
                throw Error(ErrorCode::InvalidArgument,
                            fmt::format("service ({}, {}) needs positive demands", s.id.app, s.id.index));
            if (!(s.availability_req >= 0.0 && s.availability_req <= 1.0))
                throw Error(ErrorCode::InvalidArgument,
                            fmt::format("service ({}, {}) availability requirement outside [0,1]",
                                        s.id.app, s.id.index));
        }
        orders_.push_back(topological_order(app));
        offset_.push_back(owner_.size());
        owner_.insert(owner_.end(), app.services.size(), i);
    }
}

const Service& ProblemInstance::service(std::size_t global) const {
    const std::size_t a = owner_.at(global);
    return apps_[a].services[global - offset_[a]];
}

double ProblemInstance::effective_cpu(ResourceId r) const {
    return (1.0 - reserve_fraction_) * landscape_.resource(r).cpu_capacity;
}
double ProblemInstance::effective_ram(ResourceId r) const {
    return (1.0 - reserve_fraction_) * landscape_.resource(r).ram_capacity;
}
double ProblemInstance::effective_storage(ResourceId r) const {
    return (1.0 - reserve_fraction_) * landscape_.resource(r).storage_capacity;
}

void check_deployment(const Deployment& dep, const ProblemInstance& prob) {
    if (dep.size() != prob.service_count())
        throw Error(ErrorCode::LengthMismatch,
                    fmt::format("deployment has {} entries, problem has {} services", dep.size(),
                                prob.service_count()));
    const auto r = static_cast<ResourceId>(prob.resource_count());
    for (ResourceId id : dep.assignment)
        if (id < 0 || id >= r) throw Error(ErrorCode::UnknownResource, fmt::format("unknown resource {}", id));
}

double fog_utilization(const Deployment& dep, const ProblemInstance& prob) {
    check_deployment(dep, prob);
    if (dep.size() == 0) return 0.0;
    const ResourceId cloud = prob.landscape().cloud();
    const auto fog = std::count_if(dep.assignment.begin(), dep.assignment.end(),
                                   [cloud](ResourceId r) { return r != cloud; });
    return static_cast<double>(fog) / static_cast<double>(dep.size());
}

int service_availability_score(const Service& s, const Resource& r) noexcept {
    return s.availability_req <= r.up_probability() ? 1 : 0;
}

namespace {

// Availability as an exact fraction: per-app scores are scaled to the lcm of
// the app sizes so that the objective is a single correctly rounded
// division, independent of summation order.
struct AvailabilityFraction {
    std::uint64_t numerator = 0;
    std::uint64_t per_app_denominator = 1;
};

AvailabilityFraction availability_fraction(const Deployment& dep, const ProblemInstance& prob) {
    check_deployment(dep, prob);
    AvailabilityFraction f;
    for (const Application& app : prob.apps())
        if (!app.services.empty()) f.per_app_denominator = std::lcm(f.per_app_denominator, app.services.size());
    for (std::size_t i = 0; i < prob.apps().size(); ++i) {
        const Application& app = prob.app(i);
        if (app.services.empty()) continue;
        std::uint64_t scored = 0;
        for (std::size_t j = 0; j < app.services.size(); ++j) {
            const ResourceId host = dep.assignment[prob.global_index(i, j)];
            scored += static_cast<std::uint64_t>(
                service_availability_score(app.services[j], prob.landscape().resource(host)));
        }
        f.numerator += scored * (f.per_app_denominator / app.services.size());
    }
    return f;
}

}  // namespace

double raw_availability(const Deployment& dep, const ProblemInstance& prob) {
    const auto f = availability_fraction(dep, prob);
    return static_cast<double>(f.numerator) / static_cast<double>(f.per_app_denominator);
}

double availability_objective(const Deployment& dep, const ProblemInstance& prob) {
    const auto f = availability_fraction(dep, prob);
    if (prob.apps().empty()) return 0.0;
    return static_cast<double>(f.numerator) /
           (static_cast<double>(f.per_app_denominator) * static_cast<double>(prob.apps().size()));
}

CapacityExcess capacity_violation(const Deployment& dep, const ProblemInstance& prob) {
    check_deployment(dep, prob);
    const std::size_t r_count = prob.resource_count();
    std::vector<CapacityExcess> load(r_count);
    for (std::size_t g = 0; g < dep.size(); ++g) {
        const Service& s = prob.service(g);
        auto& l = load[static_cast<std::size_t>(dep.assignment[g])];
        l.cpu += s.workload_cpu;
        l.ram += s.ram_req;
        l.storage += s.storage_req;
    }
    CapacityExcess over;
    CapacityExcess limit;
    for (std::size_t r = 0; r < r_count; ++r) {
        const auto id = static_cast<ResourceId>(r);
        const double cpu = prob.effective_cpu(id);
        const double ram = prob.effective_ram(id);
        const double storage = prob.effective_storage(id);
        over.cpu += std::max(0.0, load[r].cpu - cpu);
        over.ram += std::max(0.0, load[r].ram - ram);
        over.storage += std::max(0.0, load[r].storage - storage);
        limit.cpu += cpu;
        limit.ram += ram;
        limit.storage += storage;
    }
    return {over.cpu / limit.cpu, over.ram / limit.ram, over.storage / limit.storage};
}

double deadline_violation(const Deployment& dep, const ProblemInstance& prob) {
    const auto loads = resource_loads(dep, prob);
    double excess = 0.0;
    for (std::size_t i = 0; i < prob.apps().size(); ++i) {
        const auto rt = response_time(dep, prob, i, loads);
        const double deadline = prob.app(i).deadline_s;
        excess += rt ? std::max(0.0, *rt - deadline) / deadline : kSaturationPenalty;
    }
    return excess;
}

Evaluation evaluate(const Deployment& dep, const ProblemInstance& prob) {
    Evaluation e;
    e.objectives = {fog_utilization(dep, prob), availability_objective(dep, prob)};
    const CapacityExcess cap = capacity_violation(dep, prob);
    e.violations = {cap.cpu, cap.ram, cap.storage, deadline_violation(dep, prob)};
    return e;
}

bool is_feasible(const Deployment& dep, const ProblemInstance& prob) {
    return evaluate(dep, prob).violations.feasible();
}

std::vector<CapacityBreach> audit_capacity(const Deployment& dep, const ProblemInstance& prob) {
    check_deployment(dep, prob);
    std::vector<CapacityBreach> breaches;
    for (std::size_t r = 0; r < prob.resource_count(); ++r) {
        const auto id = static_cast<ResourceId>(r);
        double cpu = 0.0, ram = 0.0, storage = 0.0;
        for (std::size_t g = 0; g < dep.size(); ++g) {
            if (dep.assignment[g] != id) continue;
            cpu += prob.service(g).workload_cpu;
            ram += prob.service(g).ram_req;
            storage += prob.service(g).storage_req;
        }
        using D = CapacityBreach::Dimension;
        if (!(cpu <= prob.effective_cpu(id))) breaches.push_back({id, D::Cpu, cpu, prob.effective_cpu(id)});
        if (!(ram <= prob.effective_ram(id))) breaches.push_back({id, D::Ram, ram, prob.effective_ram(id)});
        if (!(storage <= prob.effective_storage(id)))
            breaches.push_back({id, D::Storage, storage, prob.effective_storage(id)});
    }
    return breaches;
}

}  // namespace fogdeploy
