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
#include <vector>

#include "lowk/error.hpp"
#include "lowk/finite_group.hpp"

namespace lowk {

struct ClassCensus {
  /// Element id -> index into classes.
  std::vector<std::uint32_t> class_of;
  /// Conjugacy classes, each sorted, listed by least element id.
  std::vector<std::vector<Elem>> classes;
  /// Order d -> classes of unordered pairs {g, g^-1} of order-d elements.
  std::map<std::uint64_t, std::uint64_t> r1_by_order;
  /// Order d -> conjugacy classes of cyclic subgroups of order d.
  std::map<std::uint64_t, std::uint64_t> r2_by_order;

  std::uint64_t r1_total() const;
  std::uint64_t r2_total() const;
};

/// Throws TooLarge when |G| exceeds max_order.
void require_brute_force(const FiniteGroup& g, std::uint64_t max_order);

ClassCensus conjugacy_classes(const FiniteGroup& g,
                              std::uint64_t max_order = kDefaultBruteForceBound);

/// {x : xg = gx}, sorted.
std::vector<Elem> centralizer(const FiniteGroup& g, Elem a);

/// True iff the element set is a cyclic group (some member generates it).
bool is_cyclic_subset(const FiniteGroup& g, const std::vector<Elem>& subset);

/// No subgroup Z_p x Z_p for any prime p.
bool check_p2_condition(const FiniteGroup& g, std::uint64_t max_order = kDefaultBruteForceBound);
/// Every subgroup of order 2p is cyclic, for every prime p.
bool check_2p_condition(const FiniteGroup& g, std::uint64_t max_order = kDefaultBruteForceBound);
/// At most one element of order 2.
bool check_milnor(const FiniteGroup& g, std::uint64_t max_order = kDefaultBruteForceBound);

}  // namespace lowk
