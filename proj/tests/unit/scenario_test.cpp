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

#include <filesystem>
#include <random>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

#include "fixtures.hpp"
#include "fogdeploy/scenario.hpp"

namespace fogdeploy {
namespace {

using testing::error_code_of;

std::string error_text(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.what();
    }
    return {};
}

TEST(DefaultScenario, Deadlines) {
    for (std::uint64_t seed : {0u, 1u, 99u}) {
        const ProblemInstance prob = paper_scenario(seed);
        ASSERT_EQ(prob.apps().size(), 5u);
        EXPECT_EQ(prob.app(1).deadline_s, 60.0);
        const double expected[] = {300, 60, 180, 240, 120};
        for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(prob.app(i).deadline_s, expected[i]);
    }
}

TEST(DefaultScenario, ResourceTables) {
    const ProblemInstance prob = paper_scenario(4);
    int cells = 0;
    for (const Resource& r : prob.landscape().resources()) {
        if (r.kind == ResourceKind::FC) {
            ++cells;
            EXPECT_EQ(r.cpu_capacity, 250);
            EXPECT_EQ(r.ram_capacity, 256);
            EXPECT_EQ(r.failure_probability, 0.20);
        } else if (r.kind == ResourceKind::FCM) {
            EXPECT_EQ(r.cpu_capacity, 1000);
            EXPECT_EQ(r.ram_capacity, 512);
            EXPECT_EQ(r.failure_probability, 0.10);
        } else {
            EXPECT_EQ(r.cpu_capacity, 200000);
            EXPECT_EQ(r.ram_capacity, 200000);
            EXPECT_DOUBLE_EQ(r.up_probability(), 0.99999);
        }
    }
    EXPECT_EQ(cells, 8);
    EXPECT_EQ(prob.resource_count(), 11u);
    EXPECT_EQ(prob.landscape().colony_count(), 2u);
}

TEST(DefaultScenario, SenseProcessActuateChains) {
    const ProblemInstance prob = paper_scenario(0);
    const double cpu[] = {50, 200, 200, 100, 50};
    const ServiceKind kinds[] = {ServiceKind::Sense, ServiceKind::Process, ServiceKind::Process,
                                 ServiceKind::Process, ServiceKind::Actuate};
    for (const Application& app : prob.apps()) {
        ASSERT_EQ(app.services.size(), 5u);
        EXPECT_EQ(app.edges, (std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}, {3, 4}}));
        EXPECT_EQ(app.request_rate, 0.1);
        for (std::size_t j = 0; j < 5; ++j) {
            EXPECT_EQ(app.services[j].workload_cpu, cpu[j]);
            EXPECT_EQ(app.services[j].kind, kinds[j]);
        }
    }
}

TEST(DefaultScenario, AvailabilityDrawsStayInTemplateRanges) {
    const double lo[] = {0.80, 0.70, 0.70, 0.90, 0.95};
    const double hi[] = {0.95, 0.95, 0.90, 0.95, 1.00};
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const ProblemInstance prob = paper_scenario(seed);
        for (const Application& app : prob.apps())
            for (std::size_t j = 0; j < 5; ++j) {
                EXPECT_GE(app.services[j].availability_req, lo[j]);
                EXPECT_LE(app.services[j].availability_req, hi[j]);
            }
    }
}

TEST(DefaultScenario, PureFunctionOfSeed) {
    const ProblemInstance a = paper_scenario(8), b = paper_scenario(8), c = paper_scenario(9);
    bool differs = false;
    for (std::size_t g = 0; g < a.service_count(); ++g) {
        EXPECT_EQ(a.service(g).availability_req, b.service(g).availability_req);
        differs = differs || a.service(g).availability_req != c.service(g).availability_req;
    }
    EXPECT_TRUE(differs);
    std::mt19937_64 rng(1);
    for (int i = 0; i < 20; ++i) {
        Deployment d = testing::random_deployment(a, rng);
        EXPECT_EQ(evaluate(d, a), evaluate(d, b));
    }
}

TEST(ScaledScenario, CountsAndIdentity) {
    const ScenarioSpec spec = default_spec(0);
    const ProblemInstance base = build_instance(spec);
    const ProblemInstance one = scaled_scenario(spec, 1);
    ASSERT_EQ(one.service_count(), base.service_count());
    for (std::size_t g = 0; g < base.service_count(); ++g)
        EXPECT_EQ(one.service(g).availability_req, base.service(g).availability_req);
    EXPECT_EQ(one.resource_count(), base.resource_count());

    const ProblemInstance two = scaled_scenario(spec, 2);
    EXPECT_EQ(two.service_count(), 50u);
    EXPECT_EQ(two.landscape().colony_count(), 4u);
    const ProblemInstance four = scaled_scenario(spec, 4);
    EXPECT_EQ(four.service_count(), 100u);
    EXPECT_EQ(four.landscape().colony_count(), 8u);
    EXPECT_EQ(four.resource_count(), 1u + 8u * 5u);
    for (std::size_t a = 0; a < four.apps().size(); ++a)
        EXPECT_EQ(four.app(a).source_colony, static_cast<ColonyId>(a % 8));
    EXPECT_TRUE(is_feasible(four.all_on(four.landscape().cloud()), four));
    EXPECT_EQ(error_code_of([&] { scaled_scenario(spec, 0); }), ErrorCode::InvalidArgument);
}

TEST(ScenarioFile, RoundTrip) {
    const ScenarioSpec spec = default_spec(42);
    EXPECT_EQ(from_json(to_json(spec)), spec);

    const auto path = std::filesystem::temp_directory_path() / "fogdeploy_scenario_roundtrip.json";
    save(spec, path);
    EXPECT_EQ(load(path), spec);
    std::filesystem::remove(path);
}

TEST(ScenarioFile, MissingDeadlinesNamesTheField) {
    auto doc = nlohmann::json::parse(to_json(default_spec(0)));
    doc["applications"].erase("deadlines_s");
    const std::string text = doc.dump(2);
    EXPECT_EQ(error_code_of([&] { from_json(text); }), ErrorCode::ParseError);
    EXPECT_NE(error_text([&] { from_json(text); }).find("deadlines"), std::string::npos);
}

TEST(ScenarioFile, NegativeFailureProbabilityRejected) {
    auto doc = nlohmann::json::parse(to_json(default_spec(0)));
    doc["resources"]["fc"]["failure_probability"] = -0.2;
    EXPECT_EQ(error_code_of([&] { from_json(doc.dump()); }), ErrorCode::InvalidArgument);
    ScenarioSpec spec = default_spec(0);
    spec.fc.failure_probability = -0.2;
    EXPECT_EQ(error_code_of([&] { validate(spec); }), ErrorCode::InvalidArgument);
}

TEST(ScenarioFile, VersionAndSyntax) {
    auto doc = nlohmann::json::parse(to_json(default_spec(0)));
    doc["version"] = 2;
    EXPECT_EQ(error_code_of([&] { from_json(doc.dump()); }), ErrorCode::UnknownVersion);
    EXPECT_EQ(error_code_of([] { from_json("{\n  \"version\": 1,\n  oops\n}"); }), ErrorCode::ParseError);
    EXPECT_NE(error_text([] { from_json("{\n  \"version\": 1,\n  oops\n}"); }).find("line 3"), std::string::npos);
    EXPECT_EQ(error_code_of([] { load("/nonexistent/scenario.json"); }), ErrorCode::ParseError);
}

TEST(ScenarioSpec, ValidationNamesField) {
    ScenarioSpec spec = default_spec(0);
    spec.deadlines_s.pop_back();
    EXPECT_NE(error_text([&] { validate(spec); }).find("deadlines"), std::string::npos);
    spec = default_spec(0);
    spec.services[0].availability_lo = 0.99;
    EXPECT_EQ(error_code_of([&] { validate(spec); }), ErrorCode::InvalidArgument);
    spec = default_spec(0);
    spec.colonies = 0;
    EXPECT_EQ(error_code_of([&] { validate(spec); }), ErrorCode::InvalidArgument);
}

}  // namespace
}  // namespace fogdeploy
