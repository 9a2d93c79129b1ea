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

#include <span>
#include <vector>

#include "fogdeploy/fsdp.hpp"

namespace fogdeploy {

enum class ExecutionPolicy { Serial, Parallel };

/// Environment variable read by the CLI to size the OpenMP thread pool.
inline constexpr const char* kWorkersEnv = "FOGDEPLOY_WORKERS";

int worker_count() noexcept;
void set_worker_count(int workers) noexcept;

/// Evaluates every deployment; result i belongs to deployment i regardless
/// of policy, so the parallel kernel is a drop-in for the serial reference.
std::vector<Evaluation> evaluate_population(std::span<const Deployment> population,
                                            const ProblemInstance& prob,
                                            ExecutionPolicy policy = ExecutionPolicy::Parallel);

}  // namespace fogdeploy
