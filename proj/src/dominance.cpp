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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "fogdeploy/error.hpp"
#include "fogdeploy/moea.hpp"

namespace fogdeploy {

Solution make_solution(Deployment dep, const ProblemInstance& prob) {
    const Evaluation e = evaluate(dep, prob);
    return {std::move(dep), e.objectives, e.violations};
}

bool pareto_dominates(const ObjectiveVector& a, const ObjectiveVector& b) noexcept {
    return a.fog_utilization >= b.fog_utilization && a.availability >= b.availability &&
           (a.fog_utilization > b.fog_utilization || a.availability > b.availability);
}

bool constrained_dominates(const Solution& a, const Solution& b) noexcept {
    const bool fa = a.feasible();
    const bool fb = b.feasible();
    if (fa != fb) return fa;
    if (!fa) return a.violations.total() < b.violations.total();
    return pareto_dominates(a.objectives, b.objectives);
}

std::vector<std::vector<std::size_t>> fast_nondominated_sort(std::span<const Solution> pop) {
    const std::size_t n = pop.size();
    std::vector<std::vector<std::size_t>> dominated(n);
    std::vector<std::size_t> dominators(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (constrained_dominates(pop[i], pop[j])) {
                dominated[i].push_back(j);
                ++dominators[j];
            } else if (constrained_dominates(pop[j], pop[i])) {
                dominated[j].push_back(i);
                ++dominators[i];
            }
        }
    }

    std::vector<std::vector<std::size_t>> fronts;
    std::vector<std::size_t> current;
    for (std::size_t i = 0; i < n; ++i)
        if (dominators[i] == 0) current.push_back(i);
    while (!current.empty()) {
        std::vector<std::size_t> next;
        for (std::size_t i : current)
            for (std::size_t j : dominated[i])
                if (--dominators[j] == 0) next.push_back(j);
        std::sort(next.begin(), next.end());
        fronts.push_back(std::move(current));
        current = std::move(next);
    }
    return fronts;
}

std::vector<double> crowding_distance(std::span<const ObjectiveVector> front) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    const std::size_t n = front.size();
    if (n <= 2) return std::vector<double>(n, inf);

    std::vector<double> distance(n, 0.0);
    std::vector<std::size_t> idx(n);
    auto accumulate = [&](auto value) {
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            const double va = value(front[a]);
            const double vb = value(front[b]);
            return va != vb ? va < vb : a < b;
        });
        const double lo = value(front[idx.front()]);
        const double hi = value(front[idx.back()]);
        distance[idx.front()] = inf;
        distance[idx.back()] = inf;
        if (hi == lo) return;
        for (std::size_t k = 1; k + 1 < n; ++k)
            distance[idx[k]] += (value(front[idx[k + 1]]) - value(front[idx[k - 1]])) / (hi - lo);
    };
    accumulate([](const ObjectiveVector& f) { return f.fog_utilization; });
    accumulate([](const ObjectiveVector& f) { return f.availability; });
    return distance;
}

double hypervolume_2d(std::span<const ObjectiveVector> front, ObjectiveVector ref) {
    if (front.empty()) throw Error(ErrorCode::EmptyFront, "hypervolume of an empty front");
    std::vector<ObjectiveVector> pts;
    for (const auto& p : front)
        if (p.fog_utilization > ref.fog_utilization && p.availability > ref.availability) pts.push_back(p);
    std::sort(pts.begin(), pts.end(), [](const ObjectiveVector& a, const ObjectiveVector& b) {
        return a.fog_utilization != b.fog_utilization ? a.fog_utilization > b.fog_utilization
                                                      : a.availability > b.availability;
    });
    double area = 0.0;
    double covered = ref.availability;
    for (const auto& p : pts) {
        if (p.availability <= covered) continue;
        area += (p.fog_utilization - ref.fog_utilization) * (p.availability - covered);
        covered = p.availability;
    }
    return area;
}

namespace {

// Objective values are sums of k/N fractions; means that agree to this
// tolerance are the same rational number.
constexpr double kTieTolerance = 1e-12;

bool better_compromise(const Solution& a, const Solution& b) {
    const double ma = 0.5 * (a.objectives.fog_utilization + a.objectives.availability);
    const double mb = 0.5 * (b.objectives.fog_utilization + b.objectives.availability);
    if (std::abs(ma - mb) > kTieTolerance) return ma > mb;
    const double da = a.objectives.availability - b.objectives.availability;
    if (std::abs(da) > kTieTolerance) return da > 0.0;
    return a.genotype < b.genotype;
}

}  // namespace

const Solution& select_compromise(std::span<const Solution> candidates) {
    if (candidates.empty()) throw Error(ErrorCode::EmptyArchive, "no compromise in an empty archive");
    const Solution* best = &candidates.front();
    for (const Solution& s : candidates.subspan(1))
        if (better_compromise(s, *best)) best = &s;
    return *best;
}

const Solution& select_compromise(const ParetoArchive& archive) {
    return select_compromise(archive.members());
}

ParetoArchive::ParetoArchive(std::size_t capacity) : capacity_(capacity) {
    if (capacity_ == 0) throw Error(ErrorCode::InvalidArgument, "archive capacity must be positive");
}

bool ParetoArchive::offer(const Solution& s) {
    for (const Solution& m : members_) {
        if (constrained_dominates(m, s)) return false;
        if (m.objectives == s.objectives && m.violations.total() == s.violations.total()) return false;
    }
    std::erase_if(members_, [&](const Solution& m) { return constrained_dominates(s, m); });
    members_.push_back(s);
    if (members_.size() > capacity_) truncate();
    return true;
}

void ParetoArchive::truncate() {
    while (members_.size() > capacity_) {
        std::vector<ObjectiveVector> objs;
        objs.reserve(members_.size());
        for (const auto& m : members_) objs.push_back(m.objectives);
        const auto dist = crowding_distance(objs);
        std::size_t victim = 0;
        for (std::size_t i = 1; i < dist.size(); ++i)
            if (dist[i] <= dist[victim]) victim = i;
        members_.erase(members_.begin() + static_cast<std::ptrdiff_t>(victim));
    }
}

std::vector<ObjectiveVector> ParetoArchive::feasible_objectives() const {
    std::vector<ObjectiveVector> out;
    for (const auto& m : members_)
        if (m.feasible()) out.push_back(m.objectives);
    return out;
}

std::string_view to_string(Algorithm algo) noexcept {
    switch (algo) {
        case Algorithm::Mopso: return "mopso";
        case Algorithm::Nsga2: return "nsga2";
        case Algorithm::Moead: return "moead";
    }
    return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept {
    if (name == "mopso") return Algorithm::Mopso;
    if (name == "nsga2") return Algorithm::Nsga2;
    if (name == "moead") return Algorithm::Moead;
    return std::nullopt;
}

}  // namespace fogdeploy
