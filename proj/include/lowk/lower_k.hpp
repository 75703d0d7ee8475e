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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lowk/abelian_group.hpp"
#include "lowk/error.hpp"
#include "lowk/finite_group.hpp"

namespace lowk {

// ---- Whitehead group --------------------------------------------------------

/// Rank from the family formula, when the family has one:
///   Z_m       floor(m/2) + 1 - d(m)
///   Dic_{4m}  m + 1 - d(2m)
///   T*, O*, I*  0, 1, 2
/// where d counts divisors.
std::optional<std::uint64_t> whitehead_rank_closed_form(const FamilyTag& tag);

/// Sum over d of r1(d) - r2(d).
std::uint64_t whitehead_rank_census(const FiniteGroup& g,
                                    std::uint64_t max_order = kDefaultBruteForceBound);

/// Uses both routes when available and throws Internal if they disagree.
std::uint64_t whitehead_rank(const FiniteGroup& g, std::uint64_t max_order = kDefaultBruteForceBound);

/// True for the five supported families; Unsupported for Custom.
bool sk1_is_trivial(const FiniteGroup& g);

// ---- K_{-1} -----------------------------------------------------------------

/// Number of Q_2-classes of order-m elements of Dic_{4m}, m an odd prime:
/// (m-1)/|<2>| if -1 lies in <2> mod m, else (m-1)/(2|<2>|).
std::uint64_t lambda(std::uint64_t m);

/// r = 1 - r_Q + sum over primes p dividing |G| of (r_{Q_p} - r_{F_p}).
std::uint64_t carter_rank_census(const FiniteGroup& g,
                                 std::uint64_t max_order = kDefaultBruteForceBound);

/// Census when |G| is within the bound, otherwise lambda(m) for Dic_{4m} with
/// m an odd prime; TooLarge when neither applies.
std::uint64_t carter_rank(const FiniteGroup& g, std::uint64_t max_order = kDefaultBruteForceBound);

/// Number of Z_2 summands (0 or 1) in K_{-1}, by family rule.
std::uint64_t k_minus_one_torsion(const FiniteGroup& g);

/// Z^r + Z_2^s.
AbelianGroupExpr k_minus_one(const FiniteGroup& g, std::uint64_t max_order = kDefaultBruteForceBound);

// ---- reduced K_0 --------------------------------------------------------------

struct K0Result {
  bool known = false;
  AbelianGroupExpr value;
  std::string reason;  // why the value is unknown
};

/// Table lookup of the reduced projective class group.
K0Result k0_tilde_lookup(const FiniteGroup& g);

// ---- rational group algebra ---------------------------------------------------

struct WedderburnComponent {
  enum class Kind { Field, Matrix, QuaternionSkewField, NamedAlgebra };
  Kind kind = Kind::Field;
  std::uint64_t size = 1;     // matrix size
  std::uint64_t subscript = 0;  // d of H_d
  std::string field;          // symbolic field or algebra, e.g. "Q(ζ_5+ζ_5^{-1})"

  std::string to_string() const;
  bool operator==(const WedderburnComponent&) const = default;
};

std::vector<WedderburnComponent> wedderburn_shape(const FiniteGroup& g);

// ---- Bass-Heller-Swan ---------------------------------------------------------

/// Keys: "Wh", "K0", "K-1", "NK0", "NK1" as needed.
///   i = 1: Wh(pi x Z) = Wh + K0 + 2 NK1
///   i = 0: K0(pi x Z) = K0 + K-1 + 2 NK0
AbelianGroupExpr bhs_decompose(const std::map<std::string, AbelianGroupExpr>& values, int i);

/// k when the group is Q_{2^k}: GeneralizedQuaternion(k), or Dicyclic(m)
/// with m = 2^{k-2}.
std::optional<unsigned> quaternion_k(const FamilyTag& tag);

}  // namespace lowk
