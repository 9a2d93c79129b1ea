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

#include <gtest/gtest.h>

#include "properties.hpp"

namespace fogdeploy::testing {
namespace {

constexpr std::size_t kCases = 1000;

void expect_holds(const PropertyResult& r) {
    EXPECT_EQ(r.cases, kCases);
    EXPECT_TRUE(r.ok()) << r.failures << " failing cases, first: " << r.first_failure;
}

TEST(Properties, DominanceIsIrreflexiveAndTransitive) { expect_holds(dominance_order(101, kCases)); }
TEST(Properties, ArchiveHoldsNoDominatedPair) { expect_holds(archive_non_domination(102, kCases)); }
TEST(Properties, HypervolumeNeverDrops) { expect_holds(hypervolume_monotone(103, kCases)); }
TEST(Properties, AvailabilityMonotoneUnderUpgrade) { expect_holds(availability_monotone(104, kCases)); }
TEST(Properties, SortMatchesBruteForce) { expect_holds(sort_matches_brute_force(105, kCases)); }

}  // namespace
}  // namespace fogdeploy::testing
