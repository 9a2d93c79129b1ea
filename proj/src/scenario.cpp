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

#include "fogdeploy/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include <fmt/core.h>
#include <json.hpp>

#include "fogdeploy/error.hpp"

namespace fogdeploy {

using nlohmann::json;

namespace {

[[noreturn]] void bad_field(const std::string& field, const std::string& why) {
    throw Error(ErrorCode::InvalidArgument, fmt::format("scenario field '{}': {}", field, why));
}

void check_resource_template(const ResourceTemplate& t, const std::string& name) {
    if (!(t.cpu > 0.0) || !(t.ram > 0.0) || !(t.storage > 0.0))
        bad_field("resources." + name, "capacities must be positive");
    if (!(t.failure_probability >= 0.0 && t.failure_probability <= 1.0))
        bad_field("resources." + name + ".failure_probability", "must lie in [0,1]");
}

}  // namespace

void validate(const ScenarioSpec& spec) {
    if (spec.colonies < 1) bad_field("topology.colonies", "must be >= 1");
    if (spec.cells_per_colony < 0) bad_field("topology.cells_per_colony", "must be >= 0");
    if (spec.apps < 1) bad_field("applications.count", "must be >= 1");
    if (spec.services_per_app < 1) bad_field("applications.services_per_app", "must be >= 1");
    if (spec.services.empty()) bad_field("services", "at least one service template is required");
    for (const auto& t : spec.services) {
        if (!(t.cpu > 0.0) || !(t.ram > 0.0) || !(t.storage > 0.0))
            bad_field("services." + t.name, "demands must be positive");
        if (!(0.0 <= t.availability_lo && t.availability_lo <= t.availability_hi && t.availability_hi <= 1.0))
            bad_field("services." + t.name + ".availability", "needs 0 <= lo <= hi <= 1");
    }
    check_resource_template(spec.cloud, "cloud");
    check_resource_template(spec.fcm, "fcm");
    check_resource_template(spec.fc, "fc");
    if (spec.deadlines_s.size() != static_cast<std::size_t>(spec.apps))
        bad_field("applications.deadlines_s", "needs one entry per application");
    if (spec.request_rates.size() != static_cast<std::size_t>(spec.apps))
        bad_field("applications.request_rates", "needs one entry per application");
    for (double d : spec.deadlines_s)
        if (!(d > 0.0)) bad_field("applications.deadlines_s", "deadlines must be positive");
    for (double r : spec.request_rates)
        if (!(r > 0.0)) bad_field("applications.request_rates", "rates must be positive");
    const auto& l = spec.latency;
    if (!(l.cell_to_manager_ms >= 0.0) || !(l.manager_to_neighbor_ms >= 0.0) || !(l.manager_to_cloud_ms >= 0.0))
        bad_field("latency_ms", "latencies must be non-negative");
    if (!(spec.reserve_fraction >= 0.0 && spec.reserve_fraction < 1.0))
        bad_field("reserve_fraction", "must lie in [0,1)");
}

ScenarioSpec default_spec(std::uint64_t seed) {
    ScenarioSpec s;
    s.services = {
        {"Sense", ServiceKind::Sense, 50, 30, 10, 0.80, 0.95},
        {"Process1", ServiceKind::Process, 200, 10, 30, 0.70, 0.95},
        {"Process2", ServiceKind::Process, 200, 20, 30, 0.70, 0.90},
        {"Process3", ServiceKind::Process, 100, 30, 30, 0.90, 0.95},
        {"Actuate", ServiceKind::Actuate, 50, 20, 10, 0.95, 1.00},
    };
    s.cloud = {200000, 200000, 1e9, 0.00001};
    s.fcm = {1000, 512, 10000, 0.10};
    s.fc = {250, 256, 1000, 0.20};
    s.deadlines_s = {300, 60, 180, 240, 120};
    s.request_rates = std::vector<double>(5, 0.1);
    s.seed = seed;
    return s;
}

namespace {

Landscape build_landscape(const ScenarioSpec& spec, int colonies) {
    std::vector<Resource> resources;
    auto add = [&](ResourceKind kind, const ResourceTemplate& t, std::optional<ColonyId> colony) {
        const auto id = static_cast<ResourceId>(resources.size());
        resources.push_back({id, kind, t.cpu, t.ram, t.storage, t.failure_probability, colony});
        return id;
    };
    add(ResourceKind::Cloud, spec.cloud, std::nullopt);

    std::vector<Colony> cols;
    std::map<ColonyId, double> cloud_latency;
    for (ColonyId c = 0; c < colonies; ++c) {
        Colony col;
        col.id = c;
        col.fcm = add(ResourceKind::FCM, spec.fcm, c);
        for (int k = 0; k < spec.cells_per_colony; ++k) col.cells.push_back(add(ResourceKind::FC, spec.fc, c));
        col.cell_latency_ms = spec.latency.cell_to_manager_ms;
        for (ColonyId other = 0; other < colonies; ++other)
            if (other != c) col.neighbor_latency_ms[other] = spec.latency.manager_to_neighbor_ms;
        cols.push_back(std::move(col));
        cloud_latency[c] = spec.latency.manager_to_cloud_ms;
    }
    return Landscape(std::move(resources), std::move(cols), std::move(cloud_latency));
}

std::vector<Application> build_apps(const ScenarioSpec& spec) {
    std::mt19937_64 rng(spec.seed);
    std::vector<Application> apps;
    for (int i = 0; i < spec.apps; ++i) {
        Application app;
        app.id = i;
        app.deadline_s = spec.deadlines_s[static_cast<std::size_t>(i)];
        app.request_rate = spec.request_rates[static_cast<std::size_t>(i)];
        for (int j = 0; j < spec.services_per_app; ++j) {
            const auto& t = spec.services[static_cast<std::size_t>(j) % spec.services.size()];
            double req = t.availability_lo;
            if (t.availability_hi > t.availability_lo) {
                req = std::uniform_real_distribution<double>(t.availability_lo, t.availability_hi)(rng);
                req = std::clamp(req, t.availability_lo, t.availability_hi);
            }
            app.services.push_back({{i, j}, t.cpu, t.ram, t.storage, req, t.kind});
            if (j > 0) app.edges.emplace_back(j - 1, j);
        }
        apps.push_back(std::move(app));
    }
    return apps;
}

ProblemInstance build_replicated(const ScenarioSpec& spec, int factor) {
    validate(spec);
    if (factor < 1) throw Error(ErrorCode::InvalidArgument, "replication factor must be >= 1");
    const int colonies = spec.colonies * factor;
    const auto base = build_apps(spec);
    std::vector<Application> apps;
    for (int r = 0; r < factor; ++r) {
        for (const Application& a : base) {
            Application copy = a;
            copy.id = static_cast<int>(apps.size());
            copy.source_colony = copy.id % colonies;
            for (Service& s : copy.services) s.id.app = copy.id;
            apps.push_back(std::move(copy));
        }
    }
    return ProblemInstance(build_landscape(spec, colonies), std::move(apps), spec.reserve_fraction);
}

}  // namespace

ProblemInstance build_instance(const ScenarioSpec& spec) { return build_replicated(spec, 1); }

ProblemInstance paper_scenario(std::uint64_t seed) { return build_instance(default_spec(seed)); }

ProblemInstance scaled_scenario(const ScenarioSpec& base, int factor) { return build_replicated(base, factor); }

// ---------------------------------------------------------------------------
// JSON schema (version 1)

namespace {

json resource_json(const ResourceTemplate& t) {
    return {{"cpu", t.cpu}, {"ram", t.ram}, {"storage", t.storage}, {"failure_probability", t.failure_probability}};
}

ServiceKind parse_kind(const std::string& s, const std::string& field) {
    if (s == "Sense") return ServiceKind::Sense;
    if (s == "Process") return ServiceKind::Process;
    if (s == "Actuate") return ServiceKind::Actuate;
    throw Error(ErrorCode::ParseError, fmt::format("field '{}': unknown service kind '{}'", field, s));
}

const json& require(const json& node, const std::string& key, const std::string& path) {
    const std::string field = path.empty() ? key : path + "." + key;
    if (!node.is_object() || !node.contains(key))
        throw Error(ErrorCode::ParseError, fmt::format("missing field '{}'", field));
    return node.at(key);
}

template <typename T>
T field(const json& node, const std::string& key, const std::string& path) {
    const json& v = require(node, key, path);
    try {
        return v.get<T>();
    } catch (const json::exception&) {
        throw Error(ErrorCode::ParseError,
                    fmt::format("field '{}' has the wrong type ({})", path.empty() ? key : path + "." + key,
                                v.type_name()));
    }
}

ResourceTemplate parse_resource(const json& root, const std::string& name) {
    const json& r = require(require(root, "resources", ""), name, "resources");
    const std::string path = "resources." + name;
    return {field<double>(r, "cpu", path), field<double>(r, "ram", path), field<double>(r, "storage", path),
            field<double>(r, "failure_probability", path)};
}

}  // namespace

std::string to_json(const ScenarioSpec& spec) {
    json services = json::array();
    for (const auto& t : spec.services) {
        services.push_back({{"name", t.name},
                            {"kind", std::string(to_string(t.kind))},
                            {"cpu", t.cpu},
                            {"ram", t.ram},
                            {"storage", t.storage},
                            {"availability", {t.availability_lo, t.availability_hi}}});
    }
    json doc = {
        {"version", kScenarioSchemaVersion},
        {"seed", spec.seed},
        {"topology", {{"colonies", spec.colonies}, {"cells_per_colony", spec.cells_per_colony}}},
        {"resources", {{"cloud", resource_json(spec.cloud)}, {"fcm", resource_json(spec.fcm)}, {"fc", resource_json(spec.fc)}}},
        {"latency_ms",
         {{"cell_to_manager", spec.latency.cell_to_manager_ms},
          {"manager_to_neighbor", spec.latency.manager_to_neighbor_ms},
          {"manager_to_cloud", spec.latency.manager_to_cloud_ms}}},
        {"reserve_fraction", spec.reserve_fraction},
        {"applications",
         {{"count", spec.apps},
          {"services_per_app", spec.services_per_app},
          {"deadlines_s", spec.deadlines_s},
          {"request_rates", spec.request_rates}}},
        {"services", services},
    };
    return doc.dump(2) + "\n";
}

ScenarioSpec from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        const auto upto = std::min<std::size_t>(e.byte, text.size());
        const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
        throw Error(ErrorCode::ParseError, fmt::format("line {}: {}", line, e.what()));
    }

    const int version = field<int>(doc, "version", "");
    if (version != kScenarioSchemaVersion)
        throw Error(ErrorCode::UnknownVersion,
                    fmt::format("scenario schema version {} is not supported (expected {})", version,
                                kScenarioSchemaVersion));

    ScenarioSpec s;
    s.seed = field<std::uint64_t>(doc, "seed", "");
    const json& topo = require(doc, "topology", "");
    s.colonies = field<int>(topo, "colonies", "topology");
    s.cells_per_colony = field<int>(topo, "cells_per_colony", "topology");
    s.cloud = parse_resource(doc, "cloud");
    s.fcm = parse_resource(doc, "fcm");
    s.fc = parse_resource(doc, "fc");
    const json& lat = require(doc, "latency_ms", "");
    s.latency.cell_to_manager_ms = field<double>(lat, "cell_to_manager", "latency_ms");
    s.latency.manager_to_neighbor_ms = field<double>(lat, "manager_to_neighbor", "latency_ms");
    s.latency.manager_to_cloud_ms = field<double>(lat, "manager_to_cloud", "latency_ms");
    s.reserve_fraction = field<double>(doc, "reserve_fraction", "");
    const json& apps = require(doc, "applications", "");
    s.apps = field<int>(apps, "count", "applications");
    s.services_per_app = field<int>(apps, "services_per_app", "applications");
    s.deadlines_s = field<std::vector<double>>(apps, "deadlines_s", "applications");
    s.request_rates = field<std::vector<double>>(apps, "request_rates", "applications");

    const json& services = require(doc, "services", "");
    if (!services.is_array()) throw Error(ErrorCode::ParseError, "field 'services' must be an array");
    for (std::size_t i = 0; i < services.size(); ++i) {
        const std::string path = fmt::format("services[{}]", i);
        const json& t = services[i];
        ServiceTemplate st;
        st.name = field<std::string>(t, "name", path);
        st.kind = parse_kind(field<std::string>(t, "kind", path), path + ".kind");
        st.cpu = field<double>(t, "cpu", path);
        st.ram = field<double>(t, "ram", path);
        st.storage = field<double>(t, "storage", path);
        const auto range = field<std::vector<double>>(t, "availability", path);
        if (range.size() != 2)
            throw Error(ErrorCode::ParseError, fmt::format("field '{}.availability' needs [lo, hi]", path));
        st.availability_lo = range[0];
        st.availability_hi = range[1];
        s.services.push_back(std::move(st));
    }
    validate(s);
    return s;
}

ScenarioSpec load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, fmt::format("cannot open scenario file '{}'", path.string()));
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json(buf.str());
}

void save(const ScenarioSpec& spec, const std::filesystem::path& path) {
    validate(spec);
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::InvalidArgument, fmt::format("cannot write scenario file '{}'", path.string()));
    out << to_json(spec);
}

}  // namespace fogdeploy
