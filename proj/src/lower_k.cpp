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

#include "lowk/lower_k.hpp"

#include <algorithm>

#include "lowk/class_census.hpp"
#include "lowk/f_conjugacy.hpp"
#include "lowk/galois_images.hpp"

namespace lowk {

using Kind = FamilyTag::Kind;

std::optional<unsigned> quaternion_k(const FamilyTag& tag) {
  if (tag.kind == Kind::GeneralizedQuaternion) return static_cast<unsigned>(tag.param);
  if (tag.kind != Kind::Dicyclic) return std::nullopt;
  std::uint64_t m = tag.param;
  if (m < 2 || (m & (m - 1))) return std::nullopt;
  unsigned k = 2;
  while (m > 1) {
    m >>= 1;
    ++k;
  }
  return k;
}

namespace {

// Dicyclic parameter m for Dic_{4m}, including Q_{2^k} = Dic_{2^k}.
std::optional<std::uint64_t> dicyclic_m(const FamilyTag& tag) {
  if (tag.kind == Kind::Dicyclic) return tag.param;
  if (tag.kind == Kind::GeneralizedQuaternion) return std::uint64_t{1} << (tag.param - 2);
  return std::nullopt;
}

}  // namespace

std::optional<std::uint64_t> whitehead_rank_closed_form(const FamilyTag& tag) {
  if (tag.kind == Kind::Cyclic) return tag.param / 2 + 1 - num_divisors(tag.param);
  if (auto m = dicyclic_m(tag)) return *m + 1 - num_divisors(2 * *m);
  switch (tag.kind) {
    case Kind::BinaryTetrahedral: return 0;
    case Kind::BinaryOctahedral: return 1;
    case Kind::BinaryIcosahedral: return 2;
    default: return std::nullopt;
  }
}

std::uint64_t whitehead_rank_census(const FiniteGroup& g, std::uint64_t max_order) {
  auto c = conjugacy_classes(g, max_order);
  std::uint64_t r = 0;
  for (auto& [d, r1] : c.r1_by_order) {
    std::uint64_t r2 = c.r2_by_order.at(d);
    if (r1 < r2) fail(ErrorCode::Internal, "census gives r1(d) < r2(d) for " + g.name());
    r += r1 - r2;
  }
  return r;
}

std::uint64_t whitehead_rank(const FiniteGroup& g, std::uint64_t max_order) {
  auto closed = whitehead_rank_closed_form(g.family());
  if (g.order() > max_order) {
    if (!closed) require_brute_force(g, max_order);
    return *closed;
  }
  std::uint64_t census = whitehead_rank_census(g, max_order);
  if (closed && *closed != census)
    fail(ErrorCode::Internal, "Whitehead rank of " + g.name() + ": formula " + std::to_string(*closed) +
                                  " disagrees with census " + std::to_string(census));
  return census;
}

bool sk1_is_trivial(const FiniteGroup& g) {
  if (g.family().kind == Kind::Custom)
    fail(ErrorCode::Unsupported, "SK1 triviality is only known here for the five group families");
  return true;
}

std::uint64_t lambda(std::uint64_t m) {
  if (m % 2 == 0 || !is_prime(m)) fail(ErrorCode::InvalidArgument, "lambda needs an odd prime, got " + std::to_string(m));
  UnitSubgroup two = generated_subgroup(m, {2});
  std::uint64_t h = two.size();
  return contains_minus_one(two) ? (m - 1) / h : (m - 1) / (2 * h);
}

std::uint64_t carter_rank_census(const FiniteGroup& g, std::uint64_t max_order) {
  auto rq = static_cast<std::int64_t>(r_F(g, FieldDescriptor::rational(), max_order));
  std::int64_t r = 1 - rq;
  for (auto p : prime_factors(g.order())) {
    r += static_cast<std::int64_t>(r_F(g, FieldDescriptor::padic(p), max_order));
    r -= static_cast<std::int64_t>(r_F(g, FieldDescriptor::finite_prime(p), max_order));
  }
  if (r < 0) fail(ErrorCode::Internal, "negative Carter rank for " + g.name());
  return static_cast<std::uint64_t>(r);
}

std::uint64_t carter_rank(const FiniteGroup& g, std::uint64_t max_order) {
  if (g.order() <= max_order) return carter_rank_census(g, max_order);
  FamilyTag t = g.family();
  if (t.kind == Kind::Dicyclic && t.param % 2 == 1 && is_prime(t.param)) return lambda(t.param);
  require_brute_force(g, max_order);
  return 0;
}

std::uint64_t k_minus_one_torsion(const FiniteGroup& g) {
  FamilyTag t = g.family();
  switch (t.kind) {
    case Kind::Cyclic: return 0;
    case Kind::BinaryTetrahedral: return 0;
    case Kind::BinaryOctahedral: return 1;
    case Kind::BinaryIcosahedral: return 1;
    default: break;
  }
  if (auto k = quaternion_k(t)) return *k >= 4 ? 1 : 0;
  if (t.kind == Kind::Dicyclic && t.param % 2 == 1 && is_prime(t.param)) return t.param % 4 == 1 ? 1 : 0;
  fail(ErrorCode::Unsupported, "K_{-1} torsion of " + g.name() + " is not covered by the known family rules");
}

AbelianGroupExpr k_minus_one(const FiniteGroup& g, std::uint64_t max_order) {
  std::uint64_t s = k_minus_one_torsion(g);
  return AbelianGroupExpr::free(carter_rank(g, max_order)) + AbelianGroupExpr::elementary(2, s);
}

K0Result k0_tilde_lookup(const FiniteGroup& g) {
  FamilyTag t = g.family();
  auto z2 = [](std::uint64_t copies) { return K0Result{true, AbelianGroupExpr::elementary(2, copies), ""}; };
  switch (t.kind) {
    case Kind::Cyclic: {
      static const std::vector<std::uint64_t> trivial{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 13, 14, 17, 19};
      if (std::find(trivial.begin(), trivial.end(), t.param) != trivial.end()) return z2(0);
      return {false, {}, "class group of Z[Z_" + std::to_string(t.param) + "] is not in the lookup table"};
    }
    case Kind::BinaryTetrahedral: return z2(1);
    case Kind::BinaryOctahedral: return z2(2);
    case Kind::BinaryIcosahedral: return z2(3);
    default: break;
  }
  if (auto m = dicyclic_m(t)) {
    switch (*m) {
      case 2: case 3: case 4: case 5: case 7: case 8: case 11: return z2(1);
      case 9: return z2(2);
      case 6: case 10: return z2(3);
      default:
        return {false, {}, "dicyclic m = " + std::to_string(*m) + " lies outside the table (m <= 11)"};
    }
  }
  return {false, {}, "no lookup data for custom groups"};
}

std::string WedderburnComponent::to_string() const {
  switch (kind) {
    case Kind::Field: return field;
    case Kind::Matrix: return "M_" + std::to_string(size) + "(" + field + ")";
    case Kind::QuaternionSkewField: return "H_" + std::to_string(subscript);
    case Kind::NamedAlgebra: return field;
  }
  return field;
}

namespace {

using WC = WedderburnComponent;

WC field(const std::string& f) { return {WC::Kind::Field, 1, 0, f}; }
WC matrix(std::uint64_t n, const std::string& f) { return {WC::Kind::Matrix, n, 0, f}; }
WC skew(std::uint64_t d) { return {WC::Kind::QuaternionSkewField, 1, d, "H_" + std::to_string(d)}; }
WC named(const std::string& f) { return {WC::Kind::NamedAlgebra, 1, 0, f}; }

std::string real_cyclotomic(std::uint64_t d) {
  return "Q(ζ_" + std::to_string(d) + "+ζ_" + std::to_string(d) + "^{-1})";
}

}  // namespace

std::vector<WedderburnComponent> wedderburn_shape(const FiniteGroup& g) {
  FamilyTag t = g.family();
  switch (t.kind) {
    case Kind::BinaryTetrahedral:
      return {field("Q"), field("Q(ζ_3)"), matrix(3, "Q"), skew(4), named("H(Q(ζ_3))")};
    case Kind::BinaryOctahedral:
      return {field("Q"), field("Q"), matrix(2, "Q"), matrix(3, "Q"), matrix(3, "Q"), skew(8), matrix(2, "H_hat")};
    case Kind::BinaryIcosahedral:
      return {field("Q"),        matrix(4, "Q"),    skew(5),           matrix(2, "H_hat"),
              matrix(5, "Q"),    matrix(3, "H(Q)"), matrix(3, "Q(√5)")};
    default: break;
  }
  if (auto k = quaternion_k(t)) {
    // Q[D] for the dihedral quotient of order 2^{k-1}, then H_{2^{k-1}}.
    std::vector<WC> out(4, field("Q"));
    for (std::uint64_t d = 4; d <= (std::uint64_t{1} << (*k - 2)); d *= 2) out.push_back(matrix(2, real_cyclotomic(d)));
    out.push_back(skew(std::uint64_t{1} << (*k - 1)));
    return out;
  }
  if (t.kind == Kind::Dicyclic && t.param % 2 == 1) {
    std::vector<WC> out{field("Q"), field("Q")};
    for (auto d : divisors(t.param))
      if (d > 2) out.push_back(matrix(2, real_cyclotomic(d)));
    out.push_back(field("Q(i)"));
    for (auto d : divisors(t.param))
      if (d > 1) out.push_back(skew(2 * d));
    return out;
  }
  fail(ErrorCode::Unsupported, "no Wedderburn shape for " + g.name() +
                                   " (supported: dicyclic with m odd or a power of 2, T*, O*, I*)");
}

AbelianGroupExpr bhs_decompose(const std::map<std::string, AbelianGroupExpr>& values, int i) {
  auto need = [&](const std::string& key) -> const AbelianGroupExpr& {
    auto it = values.find(key);
    if (it == values.end()) fail(ErrorCode::InvalidArgument, "bhs_decompose: missing value for " + key);
    return it->second;
  };
  if (i == 1) return need("Wh") + need("K0") + need("NK1").scaled(2);
  if (i == 0) return need("K0") + need("K-1") + need("NK0").scaled(2);
  fail(ErrorCode::InvalidArgument, "bhs_decompose: index must be 0 or 1");
}

}  // namespace lowk
