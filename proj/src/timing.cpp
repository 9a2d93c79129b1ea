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

#include "fogdeploy/timing.hpp"

#include <algorithm>

#include <fmt/core.h>

#include "fogdeploy/error.hpp"

namespace fogdeploy {

double md1_sojourn(const Md1Queue& q) {
    if (!(q.arrival_rate >= 0.0) || !(q.service_time > 0.0))
        throw Error(ErrorCode::InvalidArgument, "M/D/1 needs arrival_rate >= 0 and service_time > 0");
    const double rho = q.utilization();
    if (rho >= 1.0)
        throw Error(ErrorCode::Saturated, fmt::format("M/D/1 queue saturated (rho = {})", rho));
    const double d = q.service_time;
    return d + q.arrival_rate * d * d / (2.0 * (1.0 - rho));
}

namespace {

struct Accumulator {
    double rate = 0.0;
    double workload = 0.0;
    std::size_t count = 0;
};

ResourceLoad finish(const Accumulator& acc, const Resource& r) {
    ResourceLoad load;
    load.hosted = acc.count;
    if (acc.count == 0) return load;
    load.arrival_rate = acc.rate;
    load.service_time = acc.workload / static_cast<double>(acc.count) / r.cpu_capacity;
    load.utilization = load.arrival_rate * load.service_time;
    return load;
}

}  // namespace

ResourceLoad resource_load(const Deployment& dep, const ProblemInstance& prob, ResourceId r) {
    check_deployment(dep, prob);
    const Resource& res = prob.landscape().resource(r);
    Accumulator acc;
    for (std::size_t g = 0; g < dep.size(); ++g) {
        if (dep.assignment[g] != r) continue;
        acc.rate += prob.app(prob.app_of(g)).request_rate;
        acc.workload += prob.service(g).workload_cpu;
        ++acc.count;
    }
    return finish(acc, res);
}

std::vector<ResourceLoad> resource_loads(const Deployment& dep, const ProblemInstance& prob) {
    check_deployment(dep, prob);
    std::vector<Accumulator> acc(prob.resource_count());
    for (std::size_t g = 0; g < dep.size(); ++g) {
        auto& a = acc[static_cast<std::size_t>(dep.assignment[g])];
        a.rate += prob.app(prob.app_of(g)).request_rate;
        a.workload += prob.service(g).workload_cpu;
        ++a.count;
    }
    std::vector<ResourceLoad> loads;
    loads.reserve(acc.size());
    const auto resources = prob.landscape().resources();
    for (std::size_t r = 0; r < acc.size(); ++r) loads.push_back(finish(acc[r], resources[r]));
    return loads;
}

std::optional<double> response_time(const Deployment& dep, const ProblemInstance& prob,
                                    std::size_t app, const std::vector<ResourceLoad>& loads) {
    const Application& a = prob.app(app);
    const std::size_t base = prob.global_index(app, 0);
    const std::size_t n = a.services.size();
    if (n == 0) return 0.0;

    std::vector<double> sojourn(n);
    for (std::size_t j = 0; j < n; ++j) {
        const ResourceLoad& load = loads[static_cast<std::size_t>(dep.assignment[base + j])];
        if (load.saturated()) return std::nullopt;
        sojourn[j] = md1_sojourn({load.arrival_rate, load.service_time});
    }

    std::vector<std::vector<int>> pred(n);
    for (const auto& [from, to] : a.edges) pred[static_cast<std::size_t>(to)].push_back(from);

    // Longest path: finish[v] = sojourn[v] + max over predecessors of
    // (finish[u] + link latency).
    const Landscape& land = prob.landscape();
    std::vector<double> finish_at(n, 0.0);
    double rt = 0.0;
    for (int v : prob.order(app)) {
        const auto vi = static_cast<std::size_t>(v);
        double start = 0.0;
        for (int u : pred[vi]) {
            const auto ui = static_cast<std::size_t>(u);
            start = std::max(start, finish_at[ui] + land.latency_s(dep.assignment[base + ui],
                                                                   dep.assignment[base + vi]));
        }
        finish_at[vi] = start + sojourn[vi];
        rt = std::max(rt, finish_at[vi]);
    }
    return rt;
}

std::optional<double> response_time(const Deployment& dep, const ProblemInstance& prob,
                                    std::size_t app) {
    return response_time(dep, prob, app, resource_loads(dep, prob));
}

ResponseTimeReport timing_report(const Deployment& dep, const ProblemInstance& prob) {
    ResponseTimeReport report;
    report.loads = resource_loads(dep, prob);
    report.app_response_s.reserve(prob.apps().size());
    for (std::size_t i = 0; i < prob.apps().size(); ++i)
        report.app_response_s.push_back(response_time(dep, prob, i, report.loads));
    return report;
}

}  // namespace fogdeploy
