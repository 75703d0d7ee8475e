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

#include <algorithm>

#include "golden.hpp"
#include "lowk/classifier.hpp"
#include "lowk/error.hpp"
#include "lowk/finite_group.hpp"

namespace lowk {
namespace {

using D = SubgroupDescriptor;

std::vector<std::string> names(const std::vector<D>& ds) {
  std::vector<std::string> out;
  for (const auto& d : ds) out.push_back(d.name());
  return out;
}

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

FiniteGroup realise(const FamilyTag& t) {
  switch (t.kind) {
    case FamilyTag::Kind::Cyclic: return build_cyclic(t.param);
    case FamilyTag::Kind::Dicyclic: return build_dicyclic(t.param);
    case FamilyTag::Kind::GeneralizedQuaternion: return build_generalized_quaternion(static_cast<unsigned>(t.param));
    case FamilyTag::Kind::BinaryTetrahedral: return build_binary_polyhedral(BinaryPolyhedral::T);
    case FamilyTag::Kind::BinaryOctahedral: return build_binary_polyhedral(BinaryPolyhedral::O);
    case FamilyTag::Kind::BinaryIcosahedral: return build_binary_polyhedral(BinaryPolyhedral::I);
    default: break;
  }
  throw std::runtime_error("no model");
}

TEST(MaximalFinite, SmallCases) {
  EXPECT_EQ(sorted(names(maximal_finite_subgroups(4))), sorted({"Q16", "T*"}));
  EXPECT_EQ(sorted(names(maximal_finite_subgroups(5))), sorted({"Z_8", "Dic_20", "Dic_12"}));
  EXPECT_EQ(sorted(names(maximal_finite_subgroups(6))), sorted({"Z_10", "Dic_24", "O*"}));
  EXPECT_EQ(names(maximal_finite_subgroups(3)), (std::vector<std::string>{"Dic_12"}));
  EXPECT_EQ(sorted(names(maximal_finite_subgroups(12))), sorted({"Z_22", "Dic_48", "Dic_40", "O*", "I*"}));
  EXPECT_EQ(sorted(names(maximal_finite_subgroups(10))), sorted({"Z_18", "Dic_40", "Q32", "T*"}));
}

TEST(MaximalFinite, CongruenceRulesFromIndependentPredicates) {
  for (std::uint64_t n = 4; n <= 200; ++n) {
    std::vector<std::string> expect{"Dic_" + std::to_string(4 * n)};
    if (n >= 5) expect.push_back("Z_" + std::to_string(2 * (n - 1)));
    if (n == 5 || n >= 7) {
      std::uint64_t m = n - 2;
      expect.push_back((m & (m - 1)) == 0 ? "Q" + std::to_string(4 * m) : "Dic_" + std::to_string(4 * m));
    }
    if (n % 6 == 4) expect.push_back("T*");
    if (n % 6 == 0 || n % 6 == 2) expect.push_back("O*");
    if (n % 30 == 0 || n % 30 == 2 || n % 30 == 12 || n % 30 == 20) expect.push_back("I*");
    if ((n & (n - 1)) == 0) expect[0] = "Q" + std::to_string(4 * n);
    EXPECT_EQ(sorted(names(maximal_finite_subgroups(n))), sorted(expect)) << n;
  }
}

TEST(VirtuallyCyclicOdd, GoldenFiveAndSeven) {
  for (std::uint64_t n : {5, 7}) {
    auto golden = testing::read_sections("classify_n" + std::to_string(n) + ".txt");
    EXPECT_EQ(sorted(names(maximal_finite_subgroups(n))), sorted(golden["maximal_finite"])) << n;
    EXPECT_EQ(sorted(names(virtually_cyclic_classes_odd(n))), sorted(golden["virtually_cyclic"])) << n;
  }
}

TEST(VirtuallyCyclicOdd, ThreeHasOnlyFiniteClasses) {
  for (const auto& d : virtually_cyclic_classes_odd(3)) EXPECT_EQ(d.kind, D::Kind::Finite);
}

TEST(VirtuallyCyclicOdd, EveryEntrySatisfiesItsConstraints) {
  for (std::uint64_t n = 3; n <= 75; n += 2)
    for (const auto& d : virtually_cyclic_classes_odd(n)) {
      EXPECT_TRUE(satisfies_odd_constraints(d, n)) << n << " " << d.name();
      EXPECT_FALSE(d.rules.empty());
    }
}

TEST(VirtuallyCyclicOdd, ConstraintsRejectForeignEntries) {
  // Entries valid for one n are rejected for others when their divisibility fails.
  auto n9 = virtually_cyclic_classes_odd(9);
  auto n5 = virtually_cyclic_classes_odd(5);
  auto present = [](const std::vector<D>& ds, const std::string& name) {
    return std::any_of(ds.begin(), ds.end(), [&](const D& d) { return d.name() == name; });
  };
  std::size_t rejected = 0;
  for (const auto& d : n9) {
    if (present(n5, d.name())) continue;
    EXPECT_FALSE(satisfies_odd_constraints(d, 5)) << d.name();
    ++rejected;
  }
  EXPECT_GT(rejected, 0u);
}

TEST(VirtuallyCyclicOdd, FiniteEntriesEmbedInAMaximalFiniteSubgroup) {
  for (std::uint64_t n = 3; n <= 41; n += 2) {
    std::vector<std::map<std::uint64_t, std::uint64_t>> maximal;
    for (const auto& d : maximal_finite_subgroups(n)) maximal.push_back(order_census(realise(d.finite)));
    for (const auto& d : virtually_cyclic_classes_odd(n)) {
      if (d.kind != D::Kind::Finite) continue;
      auto c = order_census(realise(d.finite));
      bool fits = std::any_of(maximal.begin(), maximal.end(), [&](const auto& m) {
        for (auto [k, v] : c)
          if (!m.count(k) || m.at(k) < v) return false;
        return true;
      });
      EXPECT_TRUE(fits) << n << " " << d.name();
    }
  }
}

TEST(VirtuallyCyclicOdd, OutputIsSortedAndDeterministic) {
  for (std::uint64_t n : {9, 15, 21}) {
    auto a = virtually_cyclic_classes_odd(n), b = virtually_cyclic_classes_odd(n);
    EXPECT_EQ(names(a), names(b));
    std::set<std::string> unique;
    for (const auto& d : a) EXPECT_TRUE(unique.insert(d.name()).second) << d.name();
  }
  EXPECT_THROW(virtually_cyclic_classes_odd(4), Error);
}

TEST(VirtuallyCyclicOdd, NineHasNontrivialActions) {
  auto n = names(virtually_cyclic_classes_odd(9));
  EXPECT_NE(std::find(n.begin(), n.end(), "Z_3 ⋊ Z"), n.end());
  EXPECT_NE(std::find(n.begin(), n.end(), "Z_6 ⋊ Z"), n.end());
  EXPECT_NE(std::find(n.begin(), n.end(), "Dic_12 × Z"), n.end());
  EXPECT_NE(std::find(n.begin(), n.end(), "Dic_12 ∗_{Z_6} Dic_12"), n.end());
}

TEST(B4VirtuallyCyclic, MatchesTranscribedList) {
  auto golden = testing::read_sections("vc_b4.txt");
  std::vector<std::string> type1, type2;
  for (const auto& d : vc_classes_b4()) (d.kind == D::Kind::TypeI ? type1 : type2).push_back(d.name());
  EXPECT_EQ(sorted(type1), sorted(golden["type_I"]));
  EXPECT_EQ(sorted(type2), sorted(golden["type_II"]));
  EXPECT_EQ(type2.size(), 5u);
  for (const auto& d : vc_classes_b4())
    EXPECT_EQ(d.isomorphism_classes, d.name() == "Q16 ∗_{Q8} Q16" ? 2u : 1u) << d.name();
}

TEST(B4VirtuallyCyclic, Maximality) {
  std::map<std::string, D> by_name;
  for (const auto& d : maximal_vc_classes_b4()) by_name[d.name()] = d;
  EXPECT_EQ(by_name.at("T*").maximal, D::Maximality::Maximal);
  EXPECT_EQ(by_name.at("Q16").maximal, D::Maximality::NotMaximal);
  for (const char* n : {"Q8 × Z", "Q8 ⋊_2 Z", "Q8 ⋊_3 Z", "Q16 ∗_{Q8} Q16"}) {
    EXPECT_EQ(by_name.at(n).maximal, D::Maximality::Both) << n;
    EXPECT_EQ(by_name.at(n).conjugacy_classes, "infinitely many") << n;
  }
}

}  // namespace
}  // namespace lowk
