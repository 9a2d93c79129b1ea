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

#include "fixtures.hpp"

#include <algorithm>
#include <functional>

namespace fogdeploy::testing {

Landscape two_colony_landscape(bool zero_latency) {
    const double cell = zero_latency ? 0.0 : 2.0;
    const double neighbor = zero_latency ? 0.0 : 10.0;
    const double cloud = zero_latency ? 0.0 : 100.0;
    std::vector<Resource> rs;
    rs.push_back({0, ResourceKind::Cloud, 200000, 200000, 1e9, 0.00001, std::nullopt});
    for (int c = 0; c < 2; ++c) {
        const int base = 1 + 3 * c;
        rs.push_back({base, ResourceKind::FCM, 1000, 512, 10000, 0.10, c});
        rs.push_back({base + 1, ResourceKind::FC, 250, 256, 1000, 0.20, c});
        rs.push_back({base + 2, ResourceKind::FC, 250, 256, 1000, 0.20, c});
    }
    std::vector<Colony> cols{
        {0, 1, {2, 3}, cell, {{1, neighbor}}},
        {1, 4, {5, 6}, cell, {{0, neighbor}}},
    };
    return Landscape(std::move(rs), std::move(cols), {{0, cloud}, {1, cloud}});
}

Service make_service(int app, int index, double cpu, double availability_req, double ram, double storage) {
    Service s;
    s.id = {app, index};
    s.workload_cpu = cpu;
    s.ram_req = ram;
    s.storage_req = storage;
    s.availability_req = availability_req;
    return s;
}

Application make_chain(int id, std::vector<Service> services, double deadline_s, double request_rate,
                       ColonyId source) {
    Application app;
    app.id = id;
    for (std::size_t i = 0; i + 1 < services.size(); ++i)
        app.edges.emplace_back(static_cast<int>(i), static_cast<int>(i) + 1);
    app.services = std::move(services);
    app.deadline_s = deadline_s;
    app.request_rate = request_rate;
    app.source_colony = source;
    return app;
}

ProblemInstance random_tiny_instance(std::mt19937_64& rng) {
    auto uniform = [&](double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); };
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

    const int cells = pick(0, 2);
    std::vector<Resource> rs;
    rs.push_back({0, ResourceKind::Cloud, 200000, 200000, 1e9, 0.00001, std::nullopt});
    rs.push_back({1, ResourceKind::FCM, uniform(300, 1000), uniform(128, 512), 10000, uniform(0.0, 0.15), 0});
    Colony col{0, 1, {}, uniform(0, 5), {}};
    for (int c = 0; c < cells; ++c) {
        rs.push_back({2 + c, ResourceKind::FC, uniform(150, 300), uniform(64, 256), 1000, uniform(0.1, 0.3), 0});
        col.cells.push_back(2 + c);
    }
    Landscape land(std::move(rs), {col}, {{0, uniform(0, 100)}});

    const int services = pick(1, 6);
    const int apps = pick(1, std::min(3, services));
    std::vector<int> sizes(static_cast<std::size_t>(apps), 1);
    for (int extra = services - apps; extra > 0; --extra) ++sizes[static_cast<std::size_t>(pick(0, apps - 1))];

    const double cpus[] = {50, 100, 200};
    std::vector<Application> list;
    for (int a = 0; a < apps; ++a) {
        std::vector<Service> svc;
        for (int j = 0; j < sizes[static_cast<std::size_t>(a)]; ++j)
            svc.push_back(make_service(a, j, cpus[pick(0, 2)], uniform(0.7, 1.0), uniform(10, 80), uniform(10, 300)));
        list.push_back(make_chain(a, std::move(svc), uniform(0.5, 4.0), uniform(0.1, 1.0)));
    }
    return ProblemInstance(std::move(land), std::move(list));
}

Deployment random_deployment(const ProblemInstance& prob, std::mt19937_64& rng) {
    std::uniform_int_distribution<ResourceId> host(0, static_cast<ResourceId>(prob.resource_count()) - 1);
    Deployment d;
    for (std::size_t g = 0; g < prob.service_count(); ++g) d.assignment.push_back(host(rng));
    return d;
}

Solution random_graded_solution(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> grade(0, 4);
    Solution s;
    s.objectives = {grade(rng) / 4.0, grade(rng) / 4.0};
    if (std::bernoulli_distribution(0.5)(rng)) s.violations.deadline_excess = 0.5 * (1 + grade(rng));
    return s;
}

bool naive_constrained_dominates(const Solution& a, const Solution& b) {
    const bool fa = a.violations.total() == 0.0;
    const bool fb = b.violations.total() == 0.0;
    if (fa != fb) return fa;
    if (!fa) return a.violations.total() < b.violations.total();
    const auto& x = a.objectives;
    const auto& y = b.objectives;
    const bool no_worse = x.fog_utilization >= y.fog_utilization && x.availability >= y.availability;
    const bool better = x.fog_utilization > y.fog_utilization || x.availability > y.availability;
    return no_worse && better;
}

std::vector<ObjectiveVector> brute_force_front(const ProblemInstance& prob) {
    std::vector<ObjectiveVector> feasible;
    Deployment d{std::vector<ResourceId>(prob.service_count(), 0)};
    const auto radix = static_cast<ResourceId>(prob.resource_count());
    std::function<void(std::size_t)> visit = [&](std::size_t pos) {
        if (pos == d.size()) {
            const Evaluation e = evaluate(d, prob);
            if (e.violations.total() == 0.0) feasible.push_back(e.objectives);
            return;
        }
        for (ResourceId r = 0; r < radix; ++r) {
            d.assignment[pos] = r;
            visit(pos + 1);
        }
    };
    visit(0);

    std::vector<ObjectiveVector> front;
    for (const auto& p : feasible) {
        bool dominated = false;
        for (const auto& q : feasible) {
            if (q.fog_utilization >= p.fog_utilization && q.availability >= p.availability &&
                (q.fog_utilization > p.fog_utilization || q.availability > p.availability)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) front.push_back(p);
    }
    std::sort(front.begin(), front.end());
    front.erase(std::unique(front.begin(), front.end()), front.end());
    return front;
}

std::vector<std::vector<std::size_t>> brute_force_fronts(const std::vector<Solution>& pop) {
    std::vector<std::vector<std::size_t>> fronts;
    std::vector<bool> taken(pop.size(), false);
    std::size_t left = pop.size();
    while (left > 0) {
        std::vector<std::size_t> front;
        for (std::size_t i = 0; i < pop.size(); ++i) {
            if (taken[i]) continue;
            bool dominated = false;
            for (std::size_t j = 0; j < pop.size() && !dominated; ++j)
                dominated = !taken[j] && naive_constrained_dominates(pop[j], pop[i]);
            if (!dominated) front.push_back(i);
        }
        for (std::size_t i : front) taken[i] = true;
        left -= front.size();
        fronts.push_back(std::move(front));
    }
    return fronts;
}

}  // namespace fogdeploy::testing
