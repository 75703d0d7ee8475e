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

#include <random>

#include "lowk/b4.hpp"
#include "lowk/error.hpp"

namespace lowk {
namespace {

class B4 : public ::testing::Test {
 protected:
  static void SetUpTestSuite() { model_ = new B4Model(build_b4()); }
  static void TearDownTestSuite() {
    delete model_;
    model_ = nullptr;
  }
  const B4Model& m() const { return *model_; }
  const AmalgamSpec& s() const { return *model_->spec; }

  AmalgamElement random_element(std::mt19937_64& rng) const {
    static const std::vector<std::string> gens{"sigma1", "sigma2", "sigma3", "alpha0", "alpha1", "Delta4"};
    AmalgamElement out = s().identity();
    for (std::size_t i = 0, n = rng() % 9; i < n; ++i) {
      const auto& g = m().at(gens[rng() % gens.size()]);
      out = s().multiply(out, rng() % 2 ? g : s().invert(g));
    }
    return out;
  }

  static B4Model* model_;
};
B4Model* B4::model_ = nullptr;

TEST_F(B4, AllSuitesPass) {
  std::size_t total = 0;
  for (const auto& r : run_b4_suites("all")) {
    for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << r.suite << "/" << c.id << ": " << c.statement;
    total += r.checks.size();
  }
  EXPECT_GE(total, 100u);
  EXPECT_EQ(run_b4_suites("braid").size(), 1u);
  EXPECT_THROW(run_b4_suites("nope"), Error);
}

TEST_F(B4, SuitesAreDeterministic) {
  auto a = run_b4_suites("all"), b = run_b4_suites("all");
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].to_json().dump(), b[i].to_json().dump());
}

TEST_F(B4, BraidRelations) {
  auto eq = [&](std::vector<std::string> l, std::vector<std::string> r) { return m().word(l) == m().word(r); };
  EXPECT_TRUE(eq({"sigma1", "sigma3"}, {"sigma3", "sigma1"}));
  EXPECT_TRUE(eq({"sigma1", "sigma2", "sigma1"}, {"sigma2", "sigma1", "sigma2"}));
  EXPECT_TRUE(eq({"sigma2", "sigma3", "sigma2"}, {"sigma3", "sigma2", "sigma3"}));
  // Surface relation sigma1 sigma2 sigma3^2 sigma2 sigma1 = 1.
  EXPECT_EQ(m().word({"sigma1", "sigma2", "sigma3^2", "sigma2", "sigma1"}), s().identity());
  EXPECT_FALSE(eq({"sigma1", "sigma2"}, {"sigma2", "sigma1"}));
}

TEST_F(B4, ElementOrders) {
  EXPECT_EQ(element_order(s(), m().at("alpha0")), 8u);
  EXPECT_EQ(element_order(s(), m().at("alpha1")), 6u);
  EXPECT_EQ(element_order(s(), m().at("alpha2")), 4u);
  EXPECT_EQ(element_order(s(), m().at("Delta4")), 4u);
  EXPECT_EQ(element_order(s(), m().at("ft")), 2u);
  for (const char* g : {"sigma1", "sigma2", "sigma3", "z"}) EXPECT_EQ(element_order(s(), m().at(g)), 0u) << g;
}

TEST_F(B4, PsiIsAHomomorphism) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 500; ++i) {
    auto g = random_element(rng), h = random_element(rng);
    ASSERT_EQ(psi(m(), s().multiply(g, h)), psi(m(), g) * psi(m(), h));
  }
}

TEST_F(B4, RhoPiAndPsiFactorThroughTheFreeProduct) {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 500; ++i) {
    auto g = random_element(rng), h = random_element(rng);
    auto gh = s().multiply(g, h);
    ASSERT_EQ(rho(m(), gh), rho(m(), g) * rho(m(), h));
    ASSERT_EQ(pi(m(), gh), (pi(m(), g) + pi(m(), h)) % 6);
    ASSERT_EQ(pi(m(), g), pi_tilde(rho(m(), g)));
    ASSERT_EQ(psi(m(), g), psi_hat(rho(m(), g)));
  }
}

TEST_F(B4, NamedValues) {
  EXPECT_EQ(psi(m(), m().at("sigma1")), Perm3::cycle({1, 2}));
  EXPECT_EQ(psi(m(), m().at("sigma2")), Perm3::cycle({2, 3}));
  EXPECT_EQ(pi(m(), m().at("sigma1")), 1u);
  EXPECT_EQ(rho(m(), m().word({"sigma1^2"})).to_string(), "baba");
  EXPECT_EQ(rho(m(), m().word({"sigma2^2"})).to_string(), "abab");
  EXPECT_TRUE(psi(m(), m().at("z")).is_three_cycle());
  EXPECT_EQ(pi(m(), m().at("z")), 2u);
  // The core is the kernel of rho on finite words.
  EXPECT_TRUE(rho(m(), m().at("ft")).is_identity());
  EXPECT_TRUE(rho(m(), m().word({"alpha0^2"})).is_identity());
}

TEST_F(B4, CoreIsNormal) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    auto g = random_element(rng);
    auto image = s().conjugate_subgroup(g, m().Q);
    ASSERT_TRUE(image.has_value());
    EXPECT_EQ(*image, m().Q);
  }
}

TEST(Perm3, Algebra) {
  auto a = Perm3::cycle({1, 2, 3}), b = Perm3::cycle({1, 3});
  EXPECT_TRUE((a * a * a).is_identity());
  EXPECT_TRUE((b * b).is_identity());
  EXPECT_EQ(b * a * b, a.inverse());
  EXPECT_EQ(a.to_string(), "(1,2,3)");
  EXPECT_EQ(Perm3{}.to_string(), "()");
  EXPECT_TRUE(a.is_three_cycle());
  EXPECT_FALSE(b.is_three_cycle());
  // Right-to-left composition: (1,2)(2,3) sends 3 -> 2 -> 1.
  auto c = Perm3::cycle({1, 2}) * Perm3::cycle({2, 3});
  EXPECT_EQ(c.img[2], 0);
}

TEST(Gamma, BothAmalgamsHaveNormalCore) {
  for (int i : {1, 2}) {
    auto g = build_gamma(i);
    EXPECT_TRUE(g->core_is_normal());
    EXPECT_EQ(g->core().order(), 8u);
  }
  EXPECT_THROW(build_gamma(3), Error);
}

}  // namespace
}  // namespace lowk
