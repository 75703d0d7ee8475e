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
#include <string>
#include <vector>

namespace lowk {

// ---- elementary number theory ----------------------------------------------

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);  // distinct, ascending
std::vector<std::uint64_t> divisors(std::uint64_t n);       // ascending
std::uint64_t num_divisors(std::uint64_t n);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

/// Largest power of p dividing n, returned as (exponent, p^exponent).
std::pair<unsigned, std::uint64_t> p_part(std::uint64_t n, std::uint64_t p);

// ---- unit groups mod n ------------------------------------------------------

/// A subgroup of (Z/n)^*. Residues are kept sorted and reduced mod n, so the
/// modulus-1 group is {0}.
struct UnitSubgroup {
  std::uint64_t modulus = 1;
  std::vector<std::uint64_t> residues;

  std::size_t size() const { return residues.size(); }
  bool contains(std::uint64_t t) const;
  bool operator==(const UnitSubgroup&) const = default;
};

/// Least k >= 1 with a^k = 1 mod n. Throws InvalidArgument if gcd(a, n) != 1.
std::uint64_t mult_order(std::uint64_t a, std::uint64_t n);

/// Closure of gens under multiplication mod n.
UnitSubgroup generated_subgroup(std::uint64_t n, const std::vector<std::uint64_t>& gens);

UnitSubgroup full_unit_group(std::uint64_t n);

bool contains_minus_one(const UnitSubgroup& s);

/// A small generating set, chosen greedily by ascending residue.
std::vector<std::uint64_t> subgroup_generators(const UnitSubgroup& s);

// ---- fields ------------------------------------------------------------------

struct FieldDescriptor {
  enum class Kind { Rational, PAdic, FinitePrime };
  Kind kind = Kind::Rational;
  std::uint64_t p = 0;

  static FieldDescriptor rational() { return {Kind::Rational, 0}; }
  static FieldDescriptor padic(std::uint64_t p);
  static FieldDescriptor finite_prime(std::uint64_t p);

  /// Characteristic: 0 for Q and Q_p, p for F_p.
  std::uint64_t characteristic() const { return kind == Kind::FinitePrime ? p : 0; }

  /// "Q", "Q_3", "F_2".
  std::string name() const;

  /// Parses the CLI spelling: Q, Qp:<p>, Fp:<p>.
  static FieldDescriptor parse(const std::string& text);

  bool operator==(const FieldDescriptor&) const = default;
};

/// Image of Gal(F(zeta_n)/F) in (Z/n)^*.
///   Q      -> all units
///   F_p    -> <p>, requires p not dividing n
///   Q_p    -> units that are arbitrary on the p-part and lie in <p> on the
///             prime-to-p part (paired through CRT)
/// Moduli n = 2 mod 4 are reduced to n/2 and lifted back.
UnitSubgroup phi_image(const FieldDescriptor& field, std::uint64_t n);

}  // namespace lowk
