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

#include "lowk/class_census.hpp"

#include <algorithm>
#include <numeric>

#include "lowk/galois_images.hpp"
#include "union_find.hpp"

namespace lowk {

std::uint64_t ClassCensus::r1_total() const {
  std::uint64_t s = 0;
  for (auto& [d, c] : r1_by_order) s += c;
  return s;
}

std::uint64_t ClassCensus::r2_total() const {
  std::uint64_t s = 0;
  for (auto& [d, c] : r2_by_order) s += c;
  return s;
}

void require_brute_force(const FiniteGroup& g, std::uint64_t max_order) {
  if (g.order() > max_order)
    fail(ErrorCode::TooLarge, g.name() + " has order " + std::to_string(g.order()) +
                                  ", above the brute-force bound " + std::to_string(max_order));
}

ClassCensus conjugacy_classes(const FiniteGroup& g, std::uint64_t max_order) {
  require_brute_force(g, max_order);
  const auto n = static_cast<std::uint32_t>(g.order());
  const auto gens = g.generators();

  // Conjugation orbits under the generators.
  ClassCensus c;
  constexpr std::uint32_t kUnset = 0xFFFFFFFFu;
  c.class_of.assign(n, kUnset);
  for (Elem a = 0; a < n; ++a) {
    if (c.class_of[a] != kUnset) continue;
    auto idx = static_cast<std::uint32_t>(c.classes.size());
    std::vector<Elem> orbit{a};
    c.class_of[a] = idx;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (auto s : gens) {
        Elem b = g.conj(s, orbit[i]);
        if (c.class_of[b] == kUnset) {
          c.class_of[b] = idx;
          orbit.push_back(b);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    c.classes.push_back(std::move(orbit));
  }

  // Pairs {g, g^-1}: count each class once together with its inverse class.
  for (std::uint32_t k = 0; k < c.classes.size(); ++k) {
    Elem rep = c.classes[k][0];
    std::uint32_t other = c.class_of[g.inv(rep)];
    if (k <= other) ++c.r1_by_order[g.order_of(rep)];
  }

  // Cyclic subgroups: each one is met first through its least generator; all
  // of its generators are marked so it is never enumerated twice.
  std::vector<std::uint32_t> sub_of(n, kUnset);
  std::vector<Elem> sub_gen;
  std::vector<std::uint64_t> sub_order;
  for (Elem a = 0; a < n; ++a) {
    if (sub_of[a] != kUnset) continue;
    auto idx = static_cast<std::uint32_t>(sub_gen.size());
    const std::uint64_t ord = g.order_of(a);
    Elem h = a;
    for (std::uint64_t k = 1; k <= ord; ++k) {
      if (std::gcd(k, ord) == 1) sub_of[h] = idx;
      h = g.mul(h, a);
    }
    sub_gen.push_back(a);
    sub_order.push_back(ord);
  }
  detail::UnionFind uf(sub_gen.size());
  for (std::uint32_t k = 0; k < sub_gen.size(); ++k)
    for (auto s : gens) uf.unite(k, sub_of[g.conj(s, sub_gen[k])]);
  for (std::uint32_t k = 0; k < sub_gen.size(); ++k)
    if (uf.find(k) == k) ++c.r2_by_order[sub_order[k]];
  for (auto& [d, cnt] : c.r1_by_order) c.r2_by_order.try_emplace(d, 0);
  return c;
}

std::vector<Elem> centralizer(const FiniteGroup& g, Elem a) {
  std::vector<Elem> out;
  for (Elem x = 0; x < g.order(); ++x)
    if (g.mul(x, a) == g.mul(a, x)) out.push_back(x);
  return out;
}

bool is_cyclic_subset(const FiniteGroup& g, const std::vector<Elem>& subset) {
  for (auto a : subset)
    if (g.order_of(a) == subset.size()) return true;
  return false;
}

namespace {

std::vector<Elem> elements_of_order(const FiniteGroup& g, std::uint64_t d) {
  std::vector<Elem> out;
  for (Elem a = 0; a < g.order(); ++a)
    if (g.order_of(a) == d) out.push_back(a);
  return out;
}

}  // namespace

bool check_p2_condition(const FiniteGroup& g, std::uint64_t max_order) {
  require_brute_force(g, max_order);
  for (auto p : prime_factors(g.order())) {
    if (g.order() % (p * p)) continue;
    auto ep = elements_of_order(g, p);
    for (auto a : ep) {
      std::vector<Elem> cyc;
      for (Elem h = a; h != g.identity(); h = g.mul(h, a)) cyc.push_back(h);
      std::sort(cyc.begin(), cyc.end());
      for (auto b : ep)
        if (!std::binary_search(cyc.begin(), cyc.end(), b) && g.mul(a, b) == g.mul(b, a))
          return false;
    }
  }
  return true;
}

bool check_2p_condition(const FiniteGroup& g, std::uint64_t max_order) {
  require_brute_force(g, max_order);
  auto involutions = elements_of_order(g, 2);
  for (auto p : prime_factors(g.order())) {
    if (g.order() % (2 * p)) continue;
    // The non-cyclic groups of order 2p are Z2 x Z2 (p = 2) and the dihedral
    // group (p odd); both are an element a of order p inverted by an
    // involution outside <a>.
    for (auto a : elements_of_order(g, p))
      for (auto b : involutions)
        if (b != a && g.conj(b, a) == g.inv(a)) return false;
  }
  return true;
}

bool check_milnor(const FiniteGroup& g, std::uint64_t max_order) {
  require_brute_force(g, max_order);
  return elements_of_order(g, 2).size() <= 1;
}

}  // namespace lowk
