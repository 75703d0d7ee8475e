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

#include <json.hpp>

#include "lowk/finite_group.hpp"

namespace lowk {

/// One isomorphism class of (virtually cyclic) subgroups.
///   Finite:  `finite`
///   TypeI:   `finite` x| Z with an action of order `action_order`; `action`
///            is "Id", "-Id" or "order j"
///   TypeII:  `factor1` *_{finite} `factor2`
struct SubgroupDescriptor {
  enum class Kind { Finite, TypeI, TypeII };
  enum class Maximality { Unstated, Maximal, NotMaximal, Both };

  Kind kind = Kind::Finite;
  FamilyTag finite;
  unsigned action_order = 1;
  std::string action = "Id";
  FamilyTag factor1, factor2;
  Maximality maximal = Maximality::Unstated;
  std::string conjugacy_classes;   // e.g. "1", "infinitely many"; empty when unstated
  unsigned isomorphism_classes = 1;  // abstract classes sharing this description
  std::vector<std::string> rules;  // rule tags that produced the entry

  std::string name() const;
  nlohmann::ordered_json to_json() const;
};

/// n = 1, 2, 3 give the trivial group, Z_2, Dic_12. For n >= 4:
///   Z_{2(n-1)} if n >= 5; Dic_{4n}; Dic_{4(n-2)} if n = 5 or n >= 7;
///   T* if n = 4 mod 6; O* if n = 0, 2 mod 6; I* if n = 0, 2, 12, 20 mod 30.
std::vector<SubgroupDescriptor> maximal_finite_subgroups(std::uint64_t n);

/// Virtually cyclic subgroups of B_n(S^2), n odd >= 3, up to isomorphism.
/// Finite: Dic_{4m}, m >= 3, m | n or m | n-2; Z_m, m | 2n, 2(n-1) or 2(n-2).
/// Infinite (n >= 5), with "strict divisor" meaning a divisor other than the
/// number itself and i ranging over {0, 2}:
///   I(a)  Z_m x|_{±Id} Z, m a strict divisor of 2(n-i), m != n-i
///   I(b)  Z_m x Z, m a strict divisor of 2(n-1)
///   I(c)  Dic_{4m} x Z, m >= 3 a strict divisor of n-i
///   II(a) Z_{4q} *_{Z_{2q}} Z_{4q}, q | (n-1)/2
///   II(b) Dic_{4q} *_{Z_{2q}} Dic_{4q}, q >= 2 a strict divisor of n-i
/// Isomorphic entries are merged (their rules are kept), and the list is
/// sorted: finite, Type I, Type II, each by group parameters.
std::vector<SubgroupDescriptor> virtually_cyclic_classes_odd(std::uint64_t n);

/// Re-checks an entry of virtually_cyclic_classes_odd(n) against the
/// divisibility predicates, independently of how the list was generated.
bool satisfies_odd_constraints(const SubgroupDescriptor& d, std::uint64_t n);

/// Infinite virtually cyclic subgroups of B_4(S^2).
std::vector<SubgroupDescriptor> vc_classes_b4();

/// T* (finite, maximal), Q16 (finite, not maximal as a virtually cyclic
/// subgroup), Q8 x|_j Z for j = 1, 2, 3 and Q16 *_{Q8} Q16 (maximal and
/// non-maximal realizations both exist; infinitely many conjugacy classes of
/// maximal ones).
std::vector<SubgroupDescriptor> maximal_vc_classes_b4();

}  // namespace lowk
