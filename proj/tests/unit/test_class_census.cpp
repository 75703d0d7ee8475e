/*
 * Copyright 2026 The lowk Authors
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

#include "lowk/error.hpp"

#include "families.hpp"
#include "lowk/class_census.hpp"
#include "oracles.hpp"

namespace lowk {
namespace {

TEST(ClassCensus, MatchesNaiveClassesAndClassEquation) {
  for (const auto& g : testing::family_instances(130)) {
    auto c = conjugacy_classes(g);
    auto naive = oracle::naive_classes(g);
    ASSERT_EQ(c.classes.size(), naive.size()) << g.name();
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < c.classes.size(); ++i) {
      std::set<Elem> mine(c.classes[i].begin(), c.classes[i].end());
      EXPECT_EQ(mine, naive[i]) << g.name();
      total += mine.size();
      // Class size divides |G| (orbit-stabilizer).
      EXPECT_EQ(g.order() % mine.size(), 0u);
      EXPECT_EQ(g.order() / mine.size(), centralizer(g, c.classes[i][0]).size());
      for (auto a : c.classes[i]) EXPECT_EQ(c.class_of[a], i);
    }
    EXPECT_EQ(total, g.order());
  }
}

TEST(ClassCensus, R1AndR2MatchNaiveCounts) {
  for (const auto& g : testing::family_instances(100)) {
    auto c = conjugacy_classes(g);
    EXPECT_EQ(c.r1_by_order, oracle::inverse_pair_classes(g)) << g.name();
    EXPECT_EQ(c.r2_by_order, oracle::cyclic_subgroup_classes(g)) << g.name();
  }
}

TEST(ClassCensus, R1EqualsR2ForSmallOrders) {
  for (const auto& g : testing::family_instances(600)) {
    auto c = conjugacy_classes(g);
    for (std::uint64_t d : {1, 2, 3, 4, 6}) {
      auto r1 = c.r1_by_order.count(d) ? c.r1_by_order.at(d) : 0;
      auto r2 = c.r2_by_order.count(d) ? c.r2_by_order.at(d) : 0;
      EXPECT_EQ(r1, r2) << g.name() << " d = " << d;
    }
  }
}

TEST(ClassCensus, KnownClassNumbers) {
  EXPECT_EQ(conjugacy_classes(build_binary_polyhedral(BinaryPolyhedral::T)).classes.size(), 7u);
  EXPECT_EQ(conjugacy_classes(build_binary_polyhedral(BinaryPolyhedral::O)).classes.size(), 8u);
  EXPECT_EQ(conjugacy_classes(build_binary_polyhedral(BinaryPolyhedral::I)).classes.size(), 9u);
  // Dic_{4m}: m + 3 classes.
  for (std::uint64_t m = 2; m <= 20; ++m) EXPECT_EQ(conjugacy_classes(build_dicyclic(m)).classes.size(), m + 3);
}

TEST(ClassCensus, PeriodicityConditionsHold) {
  for (const auto& g : testing::family_instances(240)) {
    EXPECT_TRUE(check_p2_condition(g)) << g.name();
    EXPECT_TRUE(check_2p_condition(g)) << g.name();
    EXPECT_TRUE(check_milnor(g)) << g.name();
  }
}

TEST(ClassCensus, PeriodicityConditionsFailForKleinFourAndS3) {
  std::vector<std::vector<Elem>> v4{{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  auto k = build_from_cayley_table(v4);
  EXPECT_FALSE(check_p2_condition(k));
  EXPECT_FALSE(check_milnor(k));
  // S3 via permutations of {0,1,2}.
  std::vector<std::array<int, 3>> perms{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
  std::vector<std::vector<Elem>> t(6, std::vector<Elem>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      t[a][b] = static_cast<Elem>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  auto s3 = build_from_cayley_table(t);
  EXPECT_TRUE(check_p2_condition(s3));
  EXPECT_FALSE(check_2p_condition(s3));
}

TEST(ClassCensus, RefusesOversizedGroups) {
  auto g = build_dicyclic(2000);
  try {
    conjugacy_classes(g, 5000);
    FAIL() << "expected TooLarge";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooLarge);
  }
}

TEST(ClassCensus, CyclicSubsetDetection) {
  auto g = build_dicyclic(3);
  auto c = oracle::cyclic_subgroup(g, dicyclic_element(3, 1, 0));
  EXPECT_TRUE(is_cyclic_subset(g, std::vector<Elem>(c.begin(), c.end())));
  std::vector<Elem> all;
  for (Elem a = 0; a < g.order(); ++a) all.push_back(a);
  EXPECT_FALSE(is_cyclic_subset(g, all));
}

}  // namespace
}  // namespace lowk
