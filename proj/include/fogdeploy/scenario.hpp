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

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "fogdeploy/fsdp.hpp"

namespace fogdeploy {

inline constexpr int kScenarioSchemaVersion = 1;

struct ServiceTemplate {
    std::string name;
    ServiceKind kind = ServiceKind::Process;
    double cpu = 0.0;
    double ram = 0.0;
    double storage = 0.0;
    double availability_lo = 0.0;
    double availability_hi = 0.0;

    friend bool operator==(const ServiceTemplate&, const ServiceTemplate&) = default;
};

struct ResourceTemplate {
    double cpu = 0.0;
    double ram = 0.0;
    double storage = 0.0;
    double failure_probability = 0.0;

    friend bool operator==(const ResourceTemplate&, const ResourceTemplate&) = default;
};

struct LatencySettings {
    double cell_to_manager_ms = 2.0;
    double manager_to_neighbor_ms = 10.0;
    double manager_to_cloud_ms = 100.0;

    friend bool operator==(const LatencySettings&, const LatencySettings&) = default;
};

/// Everything needed to generate a ProblemInstance. Applications are linear
/// chains over `services` (service j uses template j mod size).
struct ScenarioSpec {
    int colonies = 2;
    int cells_per_colony = 4;
    int apps = 5;
    int services_per_app = 5;
    std::vector<ServiceTemplate> services;
    ResourceTemplate cloud;
    ResourceTemplate fcm;
    ResourceTemplate fc;
    std::vector<double> deadlines_s;
    std::vector<double> request_rates;
    LatencySettings latency;
    double reserve_fraction = kDefaultReserveFraction;
    std::uint64_t seed = 0;

    friend bool operator==(const ScenarioSpec&, const ScenarioSpec&) = default;
};

/// Throws Error{InvalidArgument} naming the offending field.
void validate(const ScenarioSpec& spec);

/// Five Sense-Process1-Process2-Process3-Actuate chains on two colonies of
/// one FCM and four FCs each, plus the cloud.
ScenarioSpec default_spec(std::uint64_t seed = 0);

/// Pure function of the spec (including its seed).
ProblemInstance build_instance(const ScenarioSpec& spec);

ProblemInstance paper_scenario(std::uint64_t seed);

/// Replicates the application set `factor` times and the colony pool
/// `factor` times; source colonies are assigned round-robin.
ProblemInstance scaled_scenario(const ScenarioSpec& base, int factor);

std::string to_json(const ScenarioSpec& spec);
/// Throws Error{ParseError} (with line or field) or Error{UnknownVersion}.
ScenarioSpec from_json(const std::string& text);

ScenarioSpec load(const std::filesystem::path& path);
void save(const ScenarioSpec& spec, const std::filesystem::path& path);

}  // namespace fogdeploy
