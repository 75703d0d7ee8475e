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

#include <numeric>

#include "families.hpp"
#include "lowk/class_census.hpp"
#include "lowk/f_conjugacy.hpp"
#include "lowk/lower_k.hpp"
#include "oracles.hpp"

namespace lowk {
namespace {

const FieldDescriptor kQ = FieldDescriptor::rational();
FieldDescriptor Qp(std::uint64_t p) { return FieldDescriptor::padic(p); }
FieldDescriptor Fp(std::uint64_t p) { return FieldDescriptor::finite_prime(p); }

// Reference count straight from the definition, with the exponent and the
// Galois image recomputed here.
std::uint64_t reference_r(const FiniteGroup& g, const FieldDescriptor& f) {
  std::uint64_t m = 1;
  for (Elem a = 0; a < g.order(); ++a) m = std::lcm(m, oracle::naive_order(g, a));
  const std::uint64_t p = f.characteristic();
  if (p)
    while (m % p == 0) m /= p;
  std::set<std::uint64_t> exps;
  if (f.kind == FieldDescriptor::Kind::Rational) {
    for (std::uint64_t t = 1; t <= m; ++t)
      if (std::gcd(t, m) == 1) exps.insert(t);
  } else if (f.kind == FieldDescriptor::Kind::PAdic) {
    exps = oracle::padic_units(m, f.p);
  } else {
    std::uint64_t x = 1 % m;
    do {
      exps.insert(x == 0 ? m : x);
      x = x * (p % m) % m;
    } while (!exps.count(x == 0 ? m : x));
  }
  return oracle::naive_f_classes(g, exps, [&](Elem a) { return p == 0 || oracle::naive_order(g, a) % p != 0; });
}

TEST(FConjugacy, MatchesDefinitionOnSmallGroups) {
  for (const auto& g : testing::family_instances(60))
    for (const auto& f : {kQ, Qp(2), Qp(3), Qp(5), Fp(2), Fp(3), Fp(5)})
      EXPECT_EQ(r_F(g, f), reference_r(g, f)) << g.name() << " over " << f.name();
  for (const auto& g : testing::binary_polyhedral_groups())
    for (const auto& f : {kQ, Qp(2), Qp(3), Qp(5), Fp(2), Fp(3), Fp(5)})
      EXPECT_EQ(r_F(g, f), reference_r(g, f)) << g.name() << " over " << f.name();
}

TEST(FConjugacy, BlocksAreUnionsOfClassesAndRegular) {
  for (const auto& g : testing::family_instances(200)) {
    auto census = conjugacy_classes(g);
    for (const auto& f : {kQ, Qp(2), Qp(3), Fp(2), Fp(3)}) {
      auto part = f_partition(g, f);
      std::set<Elem> covered;
      for (const auto& block : part.blocks) {
        std::set<Elem> b(block.begin(), block.end());
        for (auto a : block) {
          for (auto c : census.classes[census.class_of[a]]) EXPECT_TRUE(b.count(c)) << g.name();
          if (f.characteristic()) EXPECT_NE(g.order_of(a) % f.characteristic(), 0u);
          covered.insert(a);
        }
      }
      for (Elem a = 0; a < g.order(); ++a)
        if (!f.characteristic() || g.order_of(a) % f.characteristic() != 0) EXPECT_TRUE(covered.count(a));
    }
  }
}

TEST(FConjugacy, RationalPartitionIsCoarsest) {
  for (const auto& g : testing::family_instances(500)) {
    auto q = f_partition(g, kQ);
    std::vector<std::size_t> q_block(g.order());
    for (std::size_t i = 0; i < q.blocks.size(); ++i)
      for (auto a : q.blocks[i]) q_block[a] = i;
    for (std::uint64_t p : prime_factors(g.order())) {
      for (const auto& block : f_partition(g, Qp(p)).blocks)
        for (auto a : block) ASSERT_EQ(q_block[a], q_block[block[0]]) << g.name() << " p = " << p;
    }
  }
}

TEST(FConjugacy, RationalCountEqualsCyclicSubgroupClasses) {
  for (const auto& g : testing::family_instances(300)) {
    std::uint64_t total = 0;
    for (auto& [d, n] : conjugacy_classes(g).r2_by_order) total += n;
    EXPECT_EQ(r_F(g, kQ), total) << g.name();
  }
}

TEST(FConjugacy, DicyclicOddPrimeRelations) {
  for (std::uint64_t mu : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
    auto g = build_dicyclic(mu);
    std::uint64_t lam = lambda(mu);
    EXPECT_EQ(r_F(g, kQ), 5u) << mu;
    EXPECT_EQ(r_F(g, Qp(2)), 2 * lam + 3) << mu;
    EXPECT_EQ(r_F(g, Fp(2)), lam + 1) << mu;
    EXPECT_EQ(r_F(g, Qp(mu)), mu % 4 == 1 ? 6u : 5u) << mu;
    EXPECT_EQ(r_F(g, Fp(mu)), mu % 4 == 1 ? 4u : 3u) << mu;
  }
}

TEST(FConjugacy, GeneralizedQuaternionCounts) {
  for (unsigned k = 3; k <= 9; ++k) {
    auto g = build_generalized_quaternion(k);
    EXPECT_EQ(r_F(g, kQ), k + 2);
    EXPECT_EQ(r_F(g, Qp(2)), k + 2);
    EXPECT_EQ(r_F(g, Fp(2)), 1u);
  }
}

TEST(FConjugacy, BinaryPolyhedralCounts) {
  auto t = build_binary_polyhedral(BinaryPolyhedral::T);
  EXPECT_EQ(r_F(t, Qp(2)), 5u);
  EXPECT_EQ(r_F(t, Qp(3)), 5u);
  EXPECT_EQ(r_F(t, Fp(2)), 2u);
  EXPECT_EQ(r_F(t, Fp(3)), 3u);
  auto o = build_binary_polyhedral(BinaryPolyhedral::O);
  EXPECT_EQ(r_F(o, Qp(2)), 7u);
  EXPECT_EQ(r_F(o, Qp(3)), 7u);
  EXPECT_EQ(r_F(o, Fp(2)), 2u);
  EXPECT_EQ(r_F(o, Fp(3)), 5u);
  auto i = build_binary_polyhedral(BinaryPolyhedral::I);
  EXPECT_EQ(r_F(i, Qp(2)), 7u);
  EXPECT_EQ(r_F(i, Qp(3)), 7u);
  EXPECT_EQ(r_F(i, Qp(5)), 7u);
  EXPECT_EQ(r_F(i, Fp(2)), 3u);
  EXPECT_EQ(r_F(i, Fp(3)), 5u);
  EXPECT_EQ(r_F(i, Fp(5)), 5u);
}

TEST(FConjugacy, QuaternionOrderFourElementsStayInTheirClass) {
  auto g = build_dicyclic(2);
  for (const auto& block : f_partition(g, Qp(2)).blocks) {
    if (g.order_of(block[0]) != 4) continue;
    auto census = conjugacy_classes(g);
    EXPECT_EQ(block.size(), census.classes[census.class_of[block[0]]].size());
  }
}

TEST(FConjugacy, SingleOrderFourClassInDic20OverQ2) {
  auto g = build_dicyclic(5);
  std::size_t n = 0;
  for (const auto& block : f_partition(g, Qp(2)).blocks) n += g.order_of(block[0]) == 4;
  EXPECT_EQ(n, 1u);
}

TEST(FConjugacy, PerOrderVariantAgreesOnFamilies) {
  for (const auto& g : testing::family_instances(200))
    for (const auto& f : {kQ, Qp(2), Qp(3), Fp(2), Fp(3)})
      EXPECT_EQ(f_partition(g, f).blocks, f_partition_per_order(g, f).blocks) << g.name() << " " << f.name();
}

TEST(FConjugacy, PowerModulusDropsCharacteristic) {
  auto g = build_dicyclic(3);
  EXPECT_EQ(power_modulus(g, kQ), 12u);
  EXPECT_EQ(power_modulus(g, Fp(2)), 3u);
  EXPECT_EQ(power_modulus(g, Fp(3)), 4u);
}

}  // namespace
}  // namespace lowk
