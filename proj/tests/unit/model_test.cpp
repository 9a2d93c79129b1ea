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
#include <string>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "fogdeploy/error.hpp"
#include "fogdeploy/model.hpp"

namespace fogdeploy {
namespace {

using testing::error_code_of;
using testing::make_chain;
using testing::make_service;
using testing::two_colony_landscape;

TEST(ValidateDag, SenseProcessActuateChainIsAcyclic) {
    const Application app = make_chain(0, {make_service(0, 0, 50, 0.9), make_service(0, 1, 200, 0.8),
                                           make_service(0, 2, 50, 0.95)},
                                       60, 0.1);
    EXPECT_NO_THROW(validate_dag(app));
    EXPECT_EQ(topological_order(app), (std::vector<int>{0, 1, 2}));
}

TEST(ValidateDag, SingleServiceWithoutEdges) {
    EXPECT_NO_THROW(validate_dag(make_chain(0, {make_service(0, 0, 50, 0.9)}, 60, 0.1)));
}

TEST(ValidateDag, TwoCycleIsNamed) {
    Application app = make_chain(0, {make_service(0, 0, 50, 0.9), make_service(0, 1, 50, 0.9)}, 60, 0.1);
    app.edges = {{0, 1}, {1, 0}};
    try {
        validate_dag(app);
        FAIL() << "cycle not detected";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::CycleDetected);
        const std::string msg = e.what();
        EXPECT_TRUE(msg.find("0 -> 1 -> 0") != std::string::npos || msg.find("1 -> 0 -> 1") != std::string::npos)
            << msg;
    }
}

TEST(ValidateDag, LongerCycleBehindAcyclicPrefix) {
    Application app;
    for (int i = 0; i < 5; ++i) app.services.push_back(make_service(0, i, 50, 0.9));
    app.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 2}};
    EXPECT_EQ(error_code_of([&] { validate_dag(app); }), ErrorCode::CycleDetected);
}

TEST(ValidateDag, DanglingEdge) {
    Application app = make_chain(0, {make_service(0, 0, 50, 0.9)}, 60, 0.1);
    app.edges = {{0, 3}};
    EXPECT_EQ(error_code_of([&] { validate_dag(app); }), ErrorCode::DanglingEdge);
}

TEST(TopologicalOrder, DiamondRespectsEveryEdge) {
    Application app;
    for (int i = 0; i < 4; ++i) app.services.push_back(make_service(0, i, 50, 0.9));
    app.edges = {{2, 3}, {0, 2}, {0, 1}, {1, 3}};
    const auto order = topological_order(app);
    ASSERT_EQ(order.size(), 4u);
    auto pos = [&](int v) { return std::find(order.begin(), order.end(), v) - order.begin(); };
    for (const auto& [a, b] : app.edges) EXPECT_LT(pos(a), pos(b));
}

TEST(TierOf, Examples) {
    const Landscape land = two_colony_landscape();
    EXPECT_EQ(tier_of(land, land.cloud(), 0), Tier::Cloud);
    EXPECT_EQ(tier_of(land, land.cloud(), 1), Tier::Cloud);
    EXPECT_EQ(tier_of(land, land.colony(0).fcm, 0), Tier::FCM);
    EXPECT_EQ(tier_of(land, land.colony(1).cells.front(), 0), Tier::NFC);
}

TEST(TierOf, EnumerationMatchesMembership) {
    // Independent restatement of the tier rule over every (resource, colony) pair.
    const Landscape land = two_colony_landscape();
    for (const Resource& r : land.resources()) {
        for (const Colony& c : land.colonies()) {
            Tier expected = Tier::NFC;
            if (r.id == land.cloud()) expected = Tier::Cloud;
            else if (r.id == c.fcm) expected = Tier::FCM;
            else if (std::find(c.cells.begin(), c.cells.end(), r.id) != c.cells.end()) expected = Tier::FC;
            EXPECT_EQ(tier_of(land, r.id, c.id), expected) << "resource " << r.id << " colony " << c.id;
        }
    }
}

TEST(TierOf, UnknownIds) {
    const Landscape land = two_colony_landscape();
    EXPECT_EQ(error_code_of([&] { tier_of(land, 99, 0); }), ErrorCode::UnknownResource);
    EXPECT_EQ(error_code_of([&] { tier_of(land, 0, 7); }), ErrorCode::UnknownColony);
}

// Colony 0 with three neighbors; FCM failure probabilities are per colony.
Landscape ranking_fixture(double l1, double l2, double l3, double f1, double f2, double f3) {
    std::vector<Resource> rs{{0, ResourceKind::Cloud, 1e5, 1e5, 1e9, 0.0, std::nullopt}};
    const double fail[] = {0.1, f1, f2, f3};
    std::vector<Colony> cols;
    for (int c = 0; c < 4; ++c) {
        rs.push_back({1 + c, ResourceKind::FCM, 1000, 512, 1e4, fail[c], c});
        cols.push_back({c, 1 + c, {}, 2.0, {}});
    }
    cols[0].neighbor_latency_ms = {{1, l1}, {2, l2}, {3, l3}};
    return Landscape(rs, cols, {});
}

TEST(RankNeighbors, PureLatency) {
    std::vector<Resource> rs{{0, ResourceKind::Cloud, 1e5, 1e5, 1e9, 0.0, std::nullopt}};
    std::vector<Colony> cols;
    for (int c = 0; c < 3; ++c) {
        rs.push_back({1 + c, ResourceKind::FCM, 1000, 512, 1e4, 0.1, c});
        cols.push_back({c, 1 + c, {}, 2.0, {}});
    }
    cols[0].neighbor_latency_ms = {{1, 20.0}, {2, 5.0}};
    const Landscape land(rs, cols, {});
    EXPECT_EQ(rank_neighbors(land, 0, 1.0, 0.0), (std::vector<ColonyId>{2, 1}));
}

TEST(RankNeighbors, PureFailure) {
    const Landscape land = ranking_fixture(10, 10, 10, 0.30, 0.10, 0.20);
    EXPECT_EQ(rank_neighbors(land, 0, 0.0, 1.0), (std::vector<ColonyId>{2, 3, 1}));
}

TEST(RankNeighbors, EqualScoresByColonyId) {
    const Landscape land = ranking_fixture(10, 10, 10, 0.2, 0.2, 0.2);
    EXPECT_EQ(rank_neighbors(land, 0), (std::vector<ColonyId>{1, 2, 3}));
}

TEST(RankNeighbors, WeightedScore) {
    // Latency normalized to {0, 0.5, 1}; scores 0.5*{0,0.5,1} + 0.5*{0.8,0.1,0.0} = {0.4,0.3,0.5}.
    const Landscape land = ranking_fixture(5, 10, 15, 0.8, 0.1, 0.0);
    EXPECT_EQ(rank_neighbors(land, 0), (std::vector<ColonyId>{2, 1, 3}));
}

TEST(RankNeighbors, PermutationOfNeighborSet) {
    const Landscape land = two_colony_landscape();
    EXPECT_EQ(rank_neighbors(land, 0), (std::vector<ColonyId>{1}));
    EXPECT_EQ(error_code_of([&] { rank_neighbors(land, 0, 0.0, 0.0); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(error_code_of([&] { rank_neighbors(land, 0, -1.0, 1.0); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(error_code_of([&] { rank_neighbors(land, 5); }), ErrorCode::UnknownColony);
}

TEST(Landscape, UpProbabilities) {
    const Landscape land = two_colony_landscape();
    EXPECT_DOUBLE_EQ(land.resource(0).up_probability(), 0.99999);
    EXPECT_DOUBLE_EQ(land.resource(1).up_probability(), 0.90);
    EXPECT_DOUBLE_EQ(land.resource(2).up_probability(), 0.80);
}

TEST(Landscape, LatencyRouting) {
    const Landscape land = two_colony_landscape();
    EXPECT_DOUBLE_EQ(land.latency_s(2, 2), 0.0);
    EXPECT_DOUBLE_EQ(land.latency_s(2, 1), 0.002);
    EXPECT_DOUBLE_EQ(land.latency_s(2, 3), 0.004);
    EXPECT_DOUBLE_EQ(land.latency_s(1, 4), 0.010);
    EXPECT_DOUBLE_EQ(land.latency_s(2, 5), 0.014);
    EXPECT_DOUBLE_EQ(land.latency_s(0, 1), 0.100);
    EXPECT_DOUBLE_EQ(land.latency_s(6, 0), 0.102);
    for (const Resource& a : land.resources())
        for (const Resource& b : land.resources()) EXPECT_EQ(land.latency_s(a.id, b.id), land.latency_s(b.id, a.id));
}

TEST(Landscape, RejectsBrokenTopologies) {
    auto cloud = Resource{0, ResourceKind::Cloud, 1, 1, 1, 0.0, std::nullopt};
    auto fcm = Resource{1, ResourceKind::FCM, 1, 1, 1, 0.1, 0};
    EXPECT_EQ(error_code_of([&] { Landscape({fcm}, {}, {}); }), ErrorCode::InvalidArgument);
    auto bad = fcm;
    bad.failure_probability = -0.1;
    EXPECT_EQ(error_code_of([&] { Landscape({cloud, bad}, {{0, 1, {}, 2.0, {}}}, {}); }), ErrorCode::InvalidArgument);
    auto zero = fcm;
    zero.cpu_capacity = 0.0;
    EXPECT_EQ(error_code_of([&] { Landscape({cloud, zero}, {{0, 1, {}, 2.0, {}}}, {}); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(error_code_of([&] { Landscape({cloud, fcm}, {{0, 1, {}, 2.0, {{0, 5.0}}}}, {}); }),
              ErrorCode::InvalidArgument);
    EXPECT_EQ(error_code_of([&] { Landscape({cloud, fcm}, {{0, 1, {9}, 2.0, {}}}, {}); }), ErrorCode::UnknownResource);
    EXPECT_EQ(error_code_of([&] { Landscape({cloud, fcm}, {{0, 1, {}, 2.0, {{3, 5.0}}}}, {}); }),
              ErrorCode::UnknownColony);
}

}  // namespace
}  // namespace fogdeploy
