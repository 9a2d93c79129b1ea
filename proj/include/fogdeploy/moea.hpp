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
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "fogdeploy/fsdp.hpp"
#include "fogdeploy/parallel.hpp"

namespace fogdeploy {

struct Solution {
    Deployment genotype;
    ObjectiveVector objectives;
    ViolationVector violations;

    bool feasible() const noexcept { return violations.feasible(); }
};

Solution make_solution(Deployment dep, const ProblemInstance& prob);

/// Plain Pareto dominance for maximized objectives.
bool pareto_dominates(const ObjectiveVector& a, const ObjectiveVector& b) noexcept;

/// Feasibility-first dominance: feasible beats infeasible, smaller total
/// violation wins between infeasible solutions, Pareto dominance otherwise.
bool constrained_dominates(const Solution& a, const Solution& b) noexcept;

/// Fronts of indices into `pop` under constrained dominance; front 0 is the
/// non-dominated set. Indices within a front are ascending.
std::vector<std::vector<std::size_t>> fast_nondominated_sort(std::span<const Solution> pop);

/// Normalized neighbor-gap sum per point; extreme points get +inf.
std::vector<double> crowding_distance(std::span<const ObjectiveVector> front);

/// Area dominated by `front` and bounded below by `ref` (maximization).
/// Throws Error{EmptyFront}.
double hypervolume_2d(std::span<const ObjectiveVector> front, ObjectiveVector ref = {0.0, 0.0});

/// Bounded set of mutually non-dominated solutions. Feasible offers evict
/// every infeasible member; an offer whose objectives and total violation
/// equal an existing member's is treated as a duplicate and rejected.
class ParetoArchive {
public:
    ParetoArchive() : ParetoArchive(100) {}
    explicit ParetoArchive(std::size_t capacity);

    /// Returns true when the solution was admitted.
    bool offer(const Solution& s);

    std::span<const Solution> members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    std::size_t capacity() const noexcept { return capacity_; }
    bool empty() const noexcept { return members_.empty(); }
    bool has_feasible() const noexcept { return !members_.empty() && members_.front().feasible(); }

    /// Objective vectors of feasible members.
    std::vector<ObjectiveVector> feasible_objectives() const;

private:
    void truncate();

    std::size_t capacity_;
    std::vector<Solution> members_;
};

/// Member maximizing the mean of both objectives; ties prefer higher
/// availability, then the lexicographically smaller genotype.
/// Throws Error{EmptyArchive}.
const Solution& select_compromise(std::span<const Solution> candidates);
const Solution& select_compromise(const ParetoArchive& archive);

enum class Algorithm { Mopso, Nsga2, Moead };

std::string_view to_string(Algorithm algo) noexcept;
std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept;

struct MopsoParams {
    double inertia = 0.4;
    double cognitive = 1.5;
    double social = 1.5;
    int grid_divisions = 7;
    double mutation_rate = 0.1;
};

struct Nsga2Params {
    double crossover_probability = 0.9;
    /// Per-gene reset probability; values <= 0 mean 1/N.
    double mutation_probability = 0.0;
};

struct MoeadParams {
    std::size_t neighborhood_size = 10;
    /// Simplex-lattice resolution H; 0 means population_size - 1.
    std::size_t lattice_resolution = 0;
};

struct AlgoParams {
    std::size_t population_size = 40;
    std::size_t max_evaluations = 1000;
    std::uint64_t seed = 0;
    std::size_t archive_capacity = 100;
    ExecutionPolicy policy = ExecutionPolicy::Parallel;
    MopsoParams mopso;
    Nsga2Params nsga2;  // variation settings, shared with MOEA/D
    MoeadParams moead;
};

/// Throws Error{InvalidArgument} or Error{BudgetTooSmall}.
void validate(const AlgoParams& params);

struct GenerationRecord {
    std::size_t evaluations = 0;
    double best_fog_utilization = 0.0;
    double best_availability = 0.0;
    double compromise_fog_utilization = 0.0;
    double compromise_availability = 0.0;
    double hypervolume = 0.0;
    double feasible_fraction = 0.0;
};

struct RunResult {
    ParetoArchive archive;
    std::vector<GenerationRecord> trace;
    std::size_t evaluations = 0;
};

RunResult nsga2_run(const ProblemInstance& prob, const AlgoParams& params);
RunResult mopso_run(const ProblemInstance& prob, const AlgoParams& params);
RunResult moead_run(const ProblemInstance& prob, const AlgoParams& params);

RunResult run(Algorithm algo, const ProblemInstance& prob, const AlgoParams& params);

struct WeightVector {
    double fog = 0.0;
    double availability = 0.0;

    friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

/// {(i/H, 1 - i/H) : i = 0..H}. Throws Error{BadLattice} for H = 0.
std::vector<WeightVector> simplex_lattice(std::size_t resolution);

/// max_k w_k * |ideal_k - f_k|; smaller is better.
double tchebycheff(const ObjectiveVector& f, const WeightVector& w, const ObjectiveVector& ideal) noexcept;

}  // namespace fogdeploy
