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
#include "lowk/classifier.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "lowk/error.hpp"
#include "lowk/galois_images.hpp"

namespace lowk {

using FK = FamilyTag::Kind;
using D = SubgroupDescriptor;

namespace {

FamilyTag cyc(std::uint64_t m) { return {FK::Cyclic, m}; }
FamilyTag dic(std::uint64_t m) { return {FK::Dicyclic, m}; }
FamilyTag tstar() { return {FK::BinaryTetrahedral, 0}; }
FamilyTag ostar() { return {FK::BinaryOctahedral, 0}; }
FamilyTag istar() { return {FK::BinaryIcosahedral, 0}; }

D finite(FamilyTag g, std::string rule) {
  D d;
  d.kind = D::Kind::Finite;
  d.finite = g;
  d.rules = {std::move(rule)};
  return d;
}

D type_one(FamilyTag f, unsigned action_order, std::string action, std::string rule) {
  D d;
  d.kind = D::Kind::TypeI;
  d.finite = f;
  d.action_order = action_order;
  d.action = std::move(action);
  d.rules = {std::move(rule)};
  return d;
}

D type_two(FamilyTag f1, FamilyTag core, FamilyTag f2, std::string rule) {
  D d;
  d.kind = D::Kind::TypeII;
  d.factor1 = f1;
  d.finite = core;
  d.factor2 = f2;
  d.rules = {std::move(rule)};
  return d;
}

auto sort_key(const D& d) {
  return std::tuple{static_cast<int>(d.kind), static_cast<int>(d.finite.kind), d.finite.param, d.action_order,
                    static_cast<int>(d.factor1.kind), d.factor1.param, static_cast<int>(d.factor2.kind),
                    d.factor2.param};
}

// Merges entries with equal names, keeping every rule, then sorts.
std::vector<D> canonical(std::vector<D> in) {
  std::map<std::string, D> by_name;
  for (auto& d : in) {
    auto [it, fresh] = by_name.try_emplace(d.name(), d);
    if (fresh) continue;
    for (auto& r : d.rules)
      if (std::find(it->second.rules.begin(), it->second.rules.end(), r) == it->second.rules.end())
        it->second.rules.push_back(r);
  }
  std::vector<D> out;
  for (auto& [_, d] : by_name) out.push_back(d);
  std::sort(out.begin(), out.end(), [](const D& a, const D& b) { return sort_key(a) < sort_key(b); });
  return out;
}

std::vector<std::uint64_t> strict_divisors(std::uint64_t v) {
  auto ds = divisors(v);
  ds.pop_back();
  return ds;
}

const char* maximality_name(D::Maximality m) {
  switch (m) {
    case D::Maximality::Unstated: return "unstated";
    case D::Maximality::Maximal: return "maximal";
    case D::Maximality::NotMaximal: return "not maximal";
    case D::Maximality::Both: return "maximal and non-maximal realizations";
  }
  return "unstated";
}

}  // namespace

std::string SubgroupDescriptor::name() const {
  switch (kind) {
    case Kind::Finite: return family_name(finite);
    case Kind::TypeI: {
      std::string f = family_name(finite);
      if (action_order == 1) return f + " × Z";
      if (action == "-Id") return f + " ⋊ Z";
      return f + " ⋊_" + std::to_string(action_order) + " Z";
    }
    case Kind::TypeII:
      return family_name(factor1) + " ∗_{" + family_name(finite) + "} " + family_name(factor2);
  }
  return "?";
}

nlohmann::ordered_json SubgroupDescriptor::to_json() const {
  nlohmann::ordered_json j;
  j["name"] = name();
  j["kind"] = kind == Kind::Finite ? "finite" : kind == Kind::TypeI ? "type_I" : "type_II";
  if (kind == Kind::TypeI) {
    j["finite_part"] = family_name(finite);
    j["action"] = action;
    j["action_order"] = action_order;
  }
  if (kind == Kind::TypeII) {
    j["factors"] = {family_name(factor1), family_name(factor2)};
    j["amalgamated"] = family_name(finite);
  }
  j["maximal"] = maximality_name(maximal);
  if (!conjugacy_classes.empty()) j["conjugacy_classes"] = conjugacy_classes;
  if (isomorphism_classes != 1) j["isomorphism_classes"] = isomorphism_classes;
  j["rules"] = rules;
  return j;
}

std::vector<D> maximal_finite_subgroups(std::uint64_t n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "n must be at least 1");
  std::vector<D> out;
  if (n == 1) out.push_back(finite(cyc(1), "max-finite:B1-trivial"));
  if (n == 2) out.push_back(finite(cyc(2), "max-finite:B2-is-Z2"));
  if (n == 3) out.push_back(finite(dic(3), "max-finite:B3-is-Dic12"));
  if (n >= 4) {
    if (n >= 5) out.push_back(finite(cyc(2 * (n - 1)), "max-finite:cyclic-2(n-1)"));
    out.push_back(finite(dic(n), "max-finite:dicyclic-4n"));
    if (n == 5 || n >= 7) out.push_back(finite(dic(n - 2), "max-finite:dicyclic-4(n-2)"));
    if (n % 6 == 4) out.push_back(finite(tstar(), "max-finite:T*-n=4-mod-6"));
    if (n % 6 == 0 || n % 6 == 2) out.push_back(finite(ostar(), "max-finite:O*-n=0,2-mod-6"));
    const std::uint64_t r = n % 30;
    if (r == 0 || r == 2 || r == 12 || r == 20) out.push_back(finite(istar(), "max-finite:I*-n=0,2,12,20-mod-30"));
  }
  for (auto& d : out) d.maximal = D::Maximality::Maximal;
  return canonical(out);
}

std::vector<D> virtually_cyclic_classes_odd(std::uint64_t n) {
  if (n < 3 || n % 2 == 0) fail(ErrorCode::InvalidArgument, "n must be odd and at least 3, got " + std::to_string(n));
  std::vector<D> out;
  for (std::uint64_t v : {n, n - 2})
    for (auto m : divisors(v))
      if (m >= 3) out.push_back(finite(dic(m), "vc-odd:finite-dicyclic"));
  for (std::uint64_t v : {2 * n, 2 * (n - 1), 2 * (n - 2)})
    for (auto m : divisors(v)) out.push_back(finite(cyc(m), "vc-odd:finite-cyclic"));

  if (n >= 5) {
    for (std::uint64_t v : {n, n - 2}) {
      for (auto m : strict_divisors(2 * v)) {
        if (m == v) continue;
        out.push_back(type_one(cyc(m), 1, "Id", "vc-odd:cyclic-by-Z"));
        // -Id coincides with Id on Z_1 and Z_2.
        if (m > 2) out.push_back(type_one(cyc(m), 2, "-Id", "vc-odd:cyclic-by-Z"));
      }
      for (auto m : strict_divisors(v))
        if (m >= 3) out.push_back(type_one(dic(m), 1, "Id", "vc-odd:dicyclic-times-Z"));
      for (auto q : strict_divisors(v))
        if (q >= 2) out.push_back(type_two(dic(q), cyc(2 * q), dic(q), "vc-odd:dicyclic-amalgam"));
    }
    for (auto m : strict_divisors(2 * (n - 1))) out.push_back(type_one(cyc(m), 1, "Id", "vc-odd:cyclic-times-Z"));
    for (auto q : divisors((n - 1) / 2)) out.push_back(type_two(cyc(4 * q), cyc(2 * q), cyc(4 * q), "vc-odd:cyclic-amalgam"));
  }
  return canonical(out);
}

bool satisfies_odd_constraints(const D& d, std::uint64_t n) {
  if (n < 3 || n % 2 == 0) return false;
  auto divides = [](std::uint64_t a, std::uint64_t b) { return a != 0 && b % a == 0; };
  auto strictly_divides = [&](std::uint64_t a, std::uint64_t b) { return divides(a, b) && a != b; };
  const std::uint64_t m = d.finite.param;
  switch (d.kind) {
    case D::Kind::Finite:
      if (d.finite.kind == FK::Dicyclic) return m >= 3 && (divides(m, n) || divides(m, n - 2));
      if (d.finite.kind == FK::Cyclic)
        return divides(m, 2 * n) || divides(m, 2 * (n - 1)) || divides(m, 2 * (n - 2));
      return false;
    case D::Kind::TypeI:
      if (n < 5) return false;
      if (d.finite.kind == FK::Dicyclic)
        return d.action_order == 1 && m >= 3 && (strictly_divides(m, n) || strictly_divides(m, n - 2));
      if (d.finite.kind != FK::Cyclic) return false;
      if (d.action_order == 2) {
        return m > 2 && ((strictly_divides(m, 2 * n) && m != n) || (strictly_divides(m, 2 * (n - 2)) && m != n - 2));
      }
      return d.action_order == 1 && ((strictly_divides(m, 2 * n) && m != n) ||
                                     (strictly_divides(m, 2 * (n - 2)) && m != n - 2) ||
                                     strictly_divides(m, 2 * (n - 1)));
    case D::Kind::TypeII: {
      if (n < 5 || d.finite.kind != FK::Cyclic || d.factor1 != d.factor2) return false;
      const std::uint64_t c = d.finite.param;
      if (c % 2) return false;
      const std::uint64_t q = c / 2;
      if (d.factor1.kind == FK::Cyclic) return d.factor1.param == 4 * q && divides(q, (n - 1) / 2);
      if (d.factor1.kind == FK::Dicyclic)
        return d.factor1.param == q && q >= 2 && (strictly_divides(q, n) || strictly_divides(q, n - 2));
      return false;
    }
  }
  return false;
}

std::vector<D> vc_classes_b4() {
  std::vector<D> out;
  for (std::uint64_t k : {1, 2, 4}) out.push_back(type_one(cyc(k), 1, "Id", "vc-b4:type-I"));
  out.push_back(type_one(cyc(4), 2, "-Id", "vc-b4:type-I"));
  out.push_back(type_one(dic(2), 1, "Id", "vc-b4:type-I"));
  out.push_back(type_one(dic(2), 2, "order 2", "vc-b4:type-I"));
  out.push_back(type_one(dic(2), 3, "order 3", "vc-b4:type-I"));
  out.push_back(type_two(cyc(4), cyc(2), cyc(4), "vc-b4:type-II"));
  out.push_back(type_two(cyc(8), cyc(4), cyc(8), "vc-b4:type-II"));
  out.push_back(type_two(cyc(8), cyc(4), dic(2), "vc-b4:type-II"));
  out.push_back(type_two(dic(2), cyc(4), dic(2), "vc-b4:type-II"));
  D g = type_two(dic(4), dic(2), dic(4), "vc-b4:type-II");
  g.isomorphism_classes = 2;
  out.push_back(g);
  return canonical(out);
}

std::vector<D> maximal_vc_classes_b4() {
  std::vector<D> out;
  D t = finite(tstar(), "max-vc-b4:T*-maximal");
  t.maximal = D::Maximality::Maximal;
  t.conjugacy_classes = "1";
  out.push_back(t);
  D q = finite(dic(4), "max-vc-b4:Q16-in-Q16*Q16");
  q.maximal = D::Maximality::NotMaximal;
  q.conjugacy_classes = "1";
  out.push_back(q);
  const char* actions[] = {"Id", "order 2", "order 3"};
  for (unsigned j = 1; j <= 3; ++j) {
    D s = type_one(dic(2), j, actions[j - 1], "max-vc-b4:Q8-by-Z");
    s.maximal = D::Maximality::Both;
    s.conjugacy_classes = "infinitely many";
    out.push_back(s);
  }
  D a = type_two(dic(4), dic(2), dic(4), "max-vc-b4:Q16*Q16");
  a.maximal = D::Maximality::Both;
  a.conjugacy_classes = "infinitely many";
  a.isomorphism_classes = 2;
  out.push_back(a);
  return canonical(out);
}

}  // namespace lowk
