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
#pragma once

#include <array>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "lowk/amalgam.hpp"
#include "lowk/free_product.hpp"

namespace lowk {

/// Permutation of {1,2,3}; img[i] is the image of i+1, 0-based.
/// Composition is right to left: (p * q)(i) = p(q(i)).
struct Perm3 {
  std::array<std::uint8_t, 3> img{0, 1, 2};

  static Perm3 cycle(std::initializer_list<int> points);  // 1-based, e.g. {1,3,2}
  Perm3 operator*(const Perm3& o) const;
  Perm3 inverse() const;
  bool is_identity() const { return img == std::array<std::uint8_t, 3>{0, 1, 2}; }
  bool is_three_cycle() const;
  /// Cycle notation: "()", "(1,2)", "(1,2,3)".
  std::string to_string() const;
  bool operator==(const Perm3&) const = default;
};

/// B4(S^2) as Q16 *_{Q8} T*. Q16 = Dic_16 with u = x, v = y; the core Q8 is the
/// unit quaternions with i -> u^2, j -> v, and i -> p, j -> q in T* where
/// r p r^-1 = q, r q r^-1 = pq, r^3 = 1. Transversals {1, u} and {1, r, r^2}.
struct B4Model {
  std::shared_ptr<const AmalgamSpec> spec;
  /// alpha0, alpha1, alpha2, Delta4, ft, sigma1, sigma2, sigma3, x, y, z.
  std::map<std::string, AmalgamElement> named;
  std::vector<Elem> Q;                        // <alpha0^2, Delta4>, the whole core
  std::vector<AmalgamElement> Q_prime;        // <alpha0^2, alpha0 Delta4>
  std::array<std::vector<Elem>, 3> H;         // <Delta4>, <alpha0^2>, <alpha0^2 Delta4>

  const AmalgamElement& at(const std::string& name) const;
  /// Product of named elements; "name^k" and "name^-k" allowed, e.g.
  /// {"alpha0^2", "Delta4", "sigma1^2"}.
  AmalgamElement word(const std::vector<std::string>& factors) const;
};

/// Throws Internal if any of the built-in self-checks fail (orders of alpha0
/// and Delta4, alpha0^4 = ft, the T* relations).
B4Model build_b4();

/// Deletes the core and maps u -> b, r -> a^2, r^2 -> a.
FreeProductWord rho(const B4Model& m, const AmalgamElement& g);
/// Action on H1, H2, H3 by conjugation.
Perm3 psi(const B4Model& m, const AmalgamElement& g);
/// pi_tilde(rho(g)) with a -> 4, b -> 3 in Z6.
unsigned pi(const B4Model& m, const AmalgamElement& g);
unsigned pi_tilde(const FreeProductWord& w);
/// a -> (1,2,3), b -> (1,3); psi = psi_hat o rho.
Perm3 psi_hat(const FreeProductWord& w);

/// Order of a, or 0 when it is infinite.
std::uint64_t element_order(const AmalgamSpec& spec, const AmalgamElement& a);

struct Check {
  std::string id;
  std::string statement;
  bool pass = false;
  std::string witness;  // normal form(s) behind the verdict
};

struct CheckReport {
  std::string suite;
  std::vector<Check> checks;
  bool all_passed() const;
  std::size_t passed() const;
  nlohmann::ordered_json to_json() const;
};

CheckReport verify_braid_presentation(const B4Model& m);
CheckReport verify_action_tables(const B4Model& m);
CheckReport verify_gamma_identities();
/// x, y against the core, freeness of <x, y>, and the z = sigma2^7 sigma1 checks.
CheckReport verify_kernel(const B4Model& m);
CheckReport verify_reidemeister_schreier();

/// Suite names: braid, actions, gamma, kernel, rs, all.
std::vector<CheckReport> run_b4_suites(const std::string& suite);
const std::vector<std::string>& b4_suite_names();

/// Gamma_1 (i = 1) or Gamma_2 (i = 2) as Q16 *_{Q8} Q16 with factor
/// generators a, b and x, y, transversals {1, a} and {1, x}.
std::shared_ptr<const AmalgamSpec> build_gamma(int i);

}  // namespace lowk
