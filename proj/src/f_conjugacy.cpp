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

#include "lowk/f_conjugacy.hpp"

#include <map>
#include <numeric>

#include "lowk/class_census.hpp"
#include "union_find.hpp"

namespace lowk {

std::uint64_t power_modulus(const FiniteGroup& g, const FieldDescriptor& field) {
  std::uint64_t m = g.exponent();
  if (auto p = field.characteristic()) m /= p_part(m, p).second;
  return m;
}

namespace {

bool regular(const FiniteGroup& g, Elem a, std::uint64_t p) { return p == 0 || g.order_of(a) % p != 0; }

FPartition collect(const FiniteGroup& g, const FieldDescriptor& field, std::uint64_t modulus,
                   detail::UnionFind& uf) {
  FPartition out{field, modulus, {}};
  const std::uint64_t p = field.characteristic();
  std::map<Elem, std::size_t> slot;
  for (Elem a = 0; a < g.order(); ++a) {
    if (!regular(g, a, p)) continue;
    Elem root = uf.find(a);
    auto [it, fresh] = slot.try_emplace(root, out.blocks.size());
    if (fresh) out.blocks.emplace_back();
    out.blocks[it->second].push_back(a);
  }
  return out;
}

void unite_conjugates(const FiniteGroup& g, detail::UnionFind& uf, std::uint64_t max_order) {
  auto census = conjugacy_classes(g, max_order);
  for (const auto& cls : census.classes)
    for (auto a : cls) uf.unite(cls[0], a);
}

}  // namespace

FPartition f_partition(const FiniteGroup& g, const FieldDescriptor& field, std::uint64_t max_order) {
  require_brute_force(g, max_order);
  const std::uint64_t modulus = power_modulus(g, field);
  const auto image = phi_image(field, modulus);
  const auto powers = subgroup_generators(image);
  const std::uint64_t p = field.characteristic();

  detail::UnionFind uf(g.order());
  unite_conjugates(g, uf, max_order);
  for (Elem a = 0; a < g.order(); ++a) {
    if (!regular(g, a, p)) continue;
    for (auto t : powers) uf.unite(a, g.pow(a, static_cast<std::int64_t>(t)));
  }
  return collect(g, field, modulus, uf);
}

std::uint64_t r_F(const FiniteGroup& g, const FieldDescriptor& field, std::uint64_t max_order) {
  return f_partition(g, field, max_order).blocks.size();
}

FPartition f_partition_per_order(const FiniteGroup& g, const FieldDescriptor& field,
                                 std::uint64_t max_order) {
  require_brute_force(g, max_order);
  const std::uint64_t p = field.characteristic();
  std::map<std::uint64_t, std::vector<std::uint64_t>> by_order;

  detail::UnionFind uf(g.order());
  unite_conjugates(g, uf, max_order);
  for (Elem a = 0; a < g.order(); ++a) {
    if (!regular(g, a, p)) continue;
    const std::uint64_t d = g.order_of(a);
    auto it = by_order.find(d);
    if (it == by_order.end()) it = by_order.emplace(d, subgroup_generators(phi_image(field, d))).first;
    for (auto t : it->second) uf.unite(a, g.pow(a, static_cast<std::int64_t>(t)));
  }
  return collect(g, field, power_modulus(g, field), uf);
}

}  // namespace lowk
