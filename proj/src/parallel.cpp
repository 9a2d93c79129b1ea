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

#include "fogdeploy/parallel.hpp"

#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fogdeploy {

int worker_count() noexcept {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void set_worker_count(int workers) noexcept {
#ifdef _OPENMP
    if (workers > 0) omp_set_num_threads(workers);
#else
    (void)workers;
#endif
}

namespace {

std::vector<Evaluation> evaluate_serial(std::span<const Deployment> population, const ProblemInstance& prob) {
    std::vector<Evaluation> out;
    out.reserve(population.size());
    for (const Deployment& dep : population) out.push_back(evaluate(dep, prob));
    return out;
}

}  // namespace

std::vector<Evaluation> evaluate_population(std::span<const Deployment> population,
                                            const ProblemInstance& prob, ExecutionPolicy policy) {
    if (policy == ExecutionPolicy::Serial || population.size() < 2) return evaluate_serial(population, prob);

    std::vector<Evaluation> out(population.size());
    std::exception_ptr failure;
    const auto n = static_cast<long>(population.size());
#pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i) {
        try {
            out[static_cast<std::size_t>(i)] = evaluate(population[static_cast<std::size_t>(i)], prob);
        } catch (...) {
#pragma omp critical(fogdeploy_eval_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

}  // namespace fogdeploy
