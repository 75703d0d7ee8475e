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
#include <memory>
#include <string>
#include <vector>

namespace lowk {

/// Dense element id in [0, |G|). Ids are canonical: equal ids mean equal
/// elements, and the id order is the order of the underlying normal forms.
using Elem = std::uint32_t;

struct FamilyTag {
  enum class Kind {
    Cyclic,
    Dicyclic,
    GeneralizedQuaternion,
    BinaryTetrahedral,
    BinaryOctahedral,
    BinaryIcosahedral,
    Custom,
  };
  Kind kind = Kind::Custom;
  std::uint64_t param = 0;  // m for Cyclic/Dicyclic, k for GeneralizedQuaternion

  bool operator==(const FamilyTag&) const = default;
};

/// "Z_6", "Dic_20", "Q16", "T*", ...; Dic_{4m} with m a power of 2 prints as
/// Q_{4m}. Custom groups print as "G".
std::string family_name(const FamilyTag& t);

namespace detail {

class GroupImpl {
 public:
  virtual ~GroupImpl() = default;
  virtual std::uint64_t order() const = 0;
  virtual Elem identity() const = 0;
  virtual Elem mul(Elem a, Elem b) const = 0;
  virtual Elem inv(Elem a) const = 0;
  virtual std::uint64_t order_of(Elem a) const = 0;
  virtual std::uint64_t exponent() const = 0;
  virtual std::vector<Elem> generators() const = 0;
  virtual std::string element_name(Elem a) const = 0;
  virtual FamilyTag family() const = 0;
};

}  // namespace detail

/// Immutable handle to a concrete finite group. Copies share the model.
class FiniteGroup {
 public:
  explicit FiniteGroup(std::shared_ptr<const detail::GroupImpl> impl);

  std::uint64_t order() const { return impl_->order(); }
  Elem identity() const { return impl_->identity(); }
  Elem mul(Elem a, Elem b) const { return impl_->mul(a, b); }
  Elem inv(Elem a) const { return impl_->inv(a); }
  Elem pow(Elem a, std::int64_t k) const;
  Elem conj(Elem g, Elem x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1
  std::uint64_t order_of(Elem a) const { return impl_->order_of(a); }
  std::uint64_t exponent() const { return impl_->exponent(); }
  std::vector<Elem> generators() const { return impl_->generators(); }
  std::string element_name(Elem a) const { return impl_->element_name(a); }
  FamilyTag family() const { return impl_->family(); }

  /// Display name such as "Z_6", "Dic_20", "Q16", "T*".
  std::string name() const;

  /// Evaluates a word in the designated generators. Letter i >= 1 stands for
  /// generator i-1 and -i for its inverse.
  Elem word(const std::vector<int>& letters) const;

 private:
  std::shared_ptr<const detail::GroupImpl> impl_;
};

FiniteGroup build_cyclic(std::uint64_t m);

/// <x, y | x^m = y^2, y x y^-1 = x^-1>, elements x^a y^b with id a + 2m b.
/// Generators are x then y. Products are computed from the normal form, so no
/// table is ever built.
FiniteGroup build_dicyclic(std::uint64_t m);

/// Q_{2^k} realised by 2x2 matrices over the prime field with 12289 elements,
/// independently of the dicyclic normal form. Generators are x then y with
/// x of order 2^{k-1} and y x y^-1 = x^-1. Supports 3 <= k <= 13.
FiniteGroup build_generalized_quaternion(unsigned k);

enum class BinaryPolyhedral { T, O, I };

/// T* = SL(2,3), I* = SL(2,5), O* = closure of explicit generators in SL(2,9).
FiniteGroup build_binary_polyhedral(BinaryPolyhedral kind);

/// Group from a Cayley table over ids 0..n-1; table[a][b] = ab. The table is
/// validated (identity, inverses, associativity).
FiniteGroup build_from_cayley_table(const std::vector<std::vector<Elem>>& table,
                                    std::vector<std::string> names = {});

/// Dicyclic accessor: the element x^a y^b of build_dicyclic(m).
Elem dicyclic_element(std::uint64_t m, std::int64_t a, unsigned b);

std::vector<Elem> center(const FiniteGroup& g);

/// Order d -> number of elements of order d.
std::map<std::uint64_t, std::uint64_t> order_census(const FiniteGroup& g);

}  // namespace lowk
