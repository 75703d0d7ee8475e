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
#include "lowk/report.hpp"

#include <algorithm>

#include "lowk/b4.hpp"
#include "lowk/class_census.hpp"
#include "lowk/classifier.hpp"
#include "lowk/f_conjugacy.hpp"
#include "lowk/lower_k.hpp"

namespace lowk {

namespace {

const char* status_name(KEntry::Status s) {
  switch (s) {
    case KEntry::Status::Known: return "known";
    case KEntry::Status::Unknown: return "unknown";
    case KEntry::Status::Unsupported: return "unsupported";
    case KEntry::Status::TooLarge: return "too_large";
  }
  return "unknown";
}

}  // namespace

nlohmann::ordered_json KEntry::to_json() const {
  nlohmann::ordered_json j;
  j["status"] = status_name(status);
  if (value) {
    j["value"] = value->to_json();
    j["text"] = value->to_string();
  }
  for (auto it = details.begin(); it != details.end(); ++it) j[it.key()] = it.value();
  if (!reason.empty()) j["reason"] = reason;
  j["provenance"] = provenance;
  return j;
}

const KEntry& KReport::at(const std::string& key) const {
  for (const auto& [k, e] : entries)
    if (k == key) return e;
  fail(ErrorCode::InvalidArgument, "report has no entry " + key);
}

nlohmann::ordered_json KReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = kSchema;
  j["group"] = group;
  nlohmann::ordered_json inv = nlohmann::ordered_json::object();
  for (const auto& [k, e] : entries) inv[k] = e.to_json();
  j["invariants"] = inv;
  for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
  return j;
}

// ---- B4(S^2) ------------------------------------------------------------------

AbelianGroupExpr nil_groups_q8(int i, int twist_order) {
  if (i != 0 && i != 1) fail(ErrorCode::InvalidArgument, "Nil index must be 0 or 1");
  switch (twist_order) {
    case 1:
    case 3: return AbelianGroupExpr::named(summand::kZ2Countable);
    case 2: return AbelianGroupExpr::named(summand::kW);
    default: fail(ErrorCode::InvalidArgument, "automorphisms of Q8 up to inner ones have order 1, 2 or 3");
  }
}

std::vector<NilContribution> b4_nil_contributions(int i) {
  auto pair = [&](int order) { return nil_groups_q8(i, order).scaled(2); };
  return {
      {"Q8 × Z", pair(1), "rule:bass-heller-swan:NK_i(Z[Q8]) twice"},
      {"Q8 ⋊_2 Z", pair(2), "rule:twisted-nil:NK_i(Z[Q8], α^±1), α of order 2"},
      {"Q8 ⋊_3 Z", pair(3), "rule:twisted-nil:NK_i(Z[Q8], α^±1), α of order 3"},
      {"Q16 ∗_{Q8} Q16 (Γ1)", pair(1),
       "rule:waldhausen-nil:equals the twisted Nils of the index-2 subgroup Q8 × Z (a⁻¹x centralizes Q8)"},
      {"Q16 ∗_{Q8} Q16 (Γ2)", pair(3),
       "rule:waldhausen-nil:equals the twisted Nils of the index-2 subgroup Q8 ⋊_3 Z (a⁻¹x acts with order 3)"},
  };
}

AbelianGroupExpr b4_nil_summand(int i) {
  std::vector<AbelianGroupExpr> distinct;
  for (const auto& c : b4_nil_contributions(i))
    if (std::find(distinct.begin(), distinct.end(), c.value) == distinct.end()) distinct.push_back(c.value);
  AbelianGroupExpr out;
  for (const auto& d : distinct) out = out + d;
  return out;
}

KerCoker assemble(const AbelianGroupExpr& source,
                  const std::vector<std::pair<AbelianGroupExpr, MapFact>>& targets) {
  KerCoker out;
  auto sum_except = [&](std::size_t skip) {
    AbelianGroupExpr s;
    for (std::size_t k = 0; k < targets.size(); ++k)
      if (k != skip) s = s + targets[k].first;
    return s;
  };
  if (source.is_zero()) {
    out.cokernel = sum_except(targets.size());
    return out;
  }
  for (std::size_t k = 0; k < targets.size(); ++k) {
    if (targets[k].second != MapFact::Isomorphism) continue;
    if (targets[k].first != source) fail(ErrorCode::Internal, "isomorphism fact between non-isomorphic groups");
    out.cokernel = sum_except(k);
    return out;
  }
  out.kernel = source;
  out.cokernel = sum_except(targets.size());
  return out;
}

KReport b4_lower_k_report() {
  struct Finite {
    std::string name;
    FiniteGroup g;
    AbelianGroupExpr wh, k0, km1;
  };
  std::vector<Finite> fin;
  for (auto [name, g] : {std::pair{"Q8", build_dicyclic(2)}, std::pair{"Q16", build_dicyclic(4)},
                         std::pair{"T*", build_binary_polyhedral(BinaryPolyhedral::T)}}) {
    sk1_is_trivial(g);
    auto k0 = k0_tilde_lookup(g);
    if (!k0.known) fail(ErrorCode::Internal, "reduced K0 of " + std::string(name) + " missing from the table");
    fin.push_back({name, g, AbelianGroupExpr::free(whitehead_rank(g)), k0.value, k_minus_one(g)});
  }
  const Finite &q8 = fin[0], &q16 = fin[1], &ts = fin[2];

  // Q8 -> Q16 is zero and Q8 -> T* an isomorphism on reduced K0; the other
  // sources are zero so their maps need no facts.
  auto wh = assemble(q8.wh, {{q16.wh, MapFact::Zero}, {ts.wh, MapFact::Zero}});
  auto k0 = assemble(q8.k0, {{q16.k0, MapFact::Zero}, {ts.k0, MapFact::Isomorphism}});
  auto km1 = assemble(q8.km1, {{q16.km1, MapFact::Zero}, {ts.km1, MapFact::Zero}});

  KReport r;
  r.group = "B4(S^2)";
  const std::string finite_values = "rule:finite-values:Wh by whitehead rank census, K0~ by class group lookup, "
                                    "K_-1 by Carter formula for Q8, Q16, T*";
  auto entry = [&](const AbelianGroupExpr& finite_part, int nil_index, std::vector<std::string> prov) {
    KEntry e;
    AbelianGroupExpr symbolic = finite_part;
    AbelianGroupExpr expanded = finite_part;
    if (nil_index >= 0) {
      symbolic = symbolic + AbelianGroupExpr::named(summand::nil(nil_index));
      expanded = expanded + b4_nil_summand(nil_index).countable_sum();
    }
    e.value = symbolic;
    e.details["expanded"] = expanded.to_json();
    e.details["expanded_text"] = expanded.to_string();
    prov.push_back(finite_values);
    e.provenance = std::move(prov);
    return e;
  };
  r.entries.emplace_back(
      "wh", entry(wh.cokernel + k0.kernel, 1,
                  {"rule:amalgam-sequence:coker(Wh(Q8) -> Wh(Q16) + Wh(T*)) + ker(K0~(Q8) -> K0~(Q16) + K0~(T*))",
                   "fact:K0~(Q8) -> K0~(T*) is an isomorphism (hyperelementary induction)",
                   "rule:sk1-trivial:family", "rule:nil:maximal-infinite-virtually-cyclic-subgroups"}));
  r.entries.emplace_back(
      "k0", entry(k0.cokernel + km1.kernel, 0,
                  {"rule:amalgam-sequence:coker(K0~(Q8) -> K0~(Q16) + K0~(T*)) + ker(K_-1(Q8) -> K_-1(Q16) + K_-1(T*))",
                   "fact:K0~(Q8) -> K0~(Q16) is zero", "fact:K0~(Q8) -> K0~(T*) is an isomorphism",
                   "lookup:swan-class-group-table", "rule:nil:maximal-infinite-virtually-cyclic-subgroups"}));
  r.entries.emplace_back(
      "kminus1", entry(km1.cokernel, -1,
                       {"rule:amalgam-sequence:coker(K_-1(Q8) -> K_-1(Q16) + K_-1(T*))",
                        "rule:negative-k:K_-2 of finite groups vanishes and the Nil terms vanish below degree 0"}));

  nlohmann::ordered_json nil = nlohmann::ordered_json::object();
  for (int i : {0, 1}) {
    AbelianGroupExpr inner = b4_nil_summand(i);
    nlohmann::ordered_json n;
    n["countable_direct_sum_of"] = inner.to_json();
    n["text"] = "⊕_∞[" + inner.to_string() + "]";
    auto contributions = nlohmann::ordered_json::array();
    for (const auto& c : b4_nil_contributions(i)) {
      nlohmann::ordered_json cj;
      cj["subgroup"] = c.subgroup;
      cj["conjugacy_classes"] = "countably many";
      cj["value"] = c.value.to_json();
      cj["text"] = c.value.to_string();
      cj["rule"] = c.rule;
      contributions.push_back(cj);
    }
    n["contributions"] = contributions;
    nil[summand::nil(i)] = n;
  }
  r.extra["nil"] = nil;

  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  for (const auto& f : fin) {
    nlohmann::ordered_json v;
    v["wh"] = f.wh.to_string();
    v["k0"] = f.k0.to_string();
    v["kminus1"] = f.km1.to_string();
    inputs[f.name] = v;
  }
  r.extra["finite_inputs"] = inputs;
  r.extra["amalgam"] = "Q16 ∗_{Q8} T*";
  return r;
}

// ---- single groups ------------------------------------------------------------

const std::vector<std::string>& known_invariants() {
  static const std::vector<std::string> names{"wh", "k0", "kminus1", "rf", "wedderburn"};
  return names;
}

FiniteGroup build_family_group(const std::string& family, std::uint64_t param) {
  if (family == "cyclic") return build_cyclic(param);
  if (family == "dicyclic") return build_dicyclic(param);
  if (family == "quaternion") {
    if (param < 3 || param > 32) fail(ErrorCode::InvalidArgument, "quaternion needs 3 <= k <= 32");
    return build_dicyclic(std::uint64_t{1} << (param - 2));
  }
  if (family == "tstar") return build_binary_polyhedral(BinaryPolyhedral::T);
  if (family == "ostar") return build_binary_polyhedral(BinaryPolyhedral::O);
  if (family == "istar") return build_binary_polyhedral(BinaryPolyhedral::I);
  fail(ErrorCode::InvalidArgument,
       "unknown family " + family + " (cyclic, dicyclic, quaternion, tstar, ostar, istar)");
}

namespace {

template <class F>
KEntry guarded(F&& compute) {
  try {
    return compute();
  } catch (const Error& e) {
    KEntry out;
    if (e.code() == ErrorCode::TooLarge) out.status = KEntry::Status::TooLarge;
    else if (e.code() == ErrorCode::Unsupported) out.status = KEntry::Status::Unsupported;
    else throw;
    out.reason = e.what();
    return out;
  }
}

KEntry wh_entry(const FiniteGroup& g, std::uint64_t max_order) {
  KEntry e;
  std::uint64_t r = whitehead_rank(g, max_order);
  bool census = g.order() <= max_order;
  e.value = AbelianGroupExpr::free(r);
  e.details["rank"] = r;
  e.details["sk1_trivial"] = sk1_is_trivial(g);
  if (census) e.provenance.push_back("rule:whitehead-rank:census sum of r1(d) - r2(d)");
  if (whitehead_rank_closed_form(g.family()))
    e.provenance.push_back(census ? "rule:whitehead-rank:closed form (cross-checked)" : "rule:whitehead-rank:closed form");
  e.provenance.push_back("rule:sk1-trivial:family");
  return e;
}

KEntry k0_entry(const FiniteGroup& g) {
  KEntry e;
  auto k = k0_tilde_lookup(g);
  if (k.known) e.value = k.value;
  else {
    e.status = KEntry::Status::Unknown;
    e.reason = k.reason;
  }
  e.provenance.push_back(g.family().kind == FamilyTag::Kind::Cyclic ? "lookup:cyclic-trivial-class-group-list"
                                                                    : "lookup:swan-class-group-table");
  return e;
}

KEntry kminus1_entry(const FiniteGroup& g, std::uint64_t max_order) {
  KEntry e;
  std::uint64_t s = k_minus_one_torsion(g);
  std::uint64_t r = carter_rank(g, max_order);
  e.value = AbelianGroupExpr::free(r) + AbelianGroupExpr::elementary(2, s);
  e.details["carter_rank"] = r;
  e.details["z2_summands"] = s;
  e.provenance.push_back(g.order() <= max_order ? "rule:carter-formula:F-conjugacy census over Q, Q_p, F_p"
                                                : "rule:carter-rank:lambda closed form");
  e.provenance.push_back("rule:k-1-torsion:family");
  return e;
}

KEntry rf_entry(const FiniteGroup& g, const FieldDescriptor& field, std::uint64_t max_order) {
  KEntry e;
  auto part = f_partition(g, field, max_order);
  e.details["field"] = field.name();
  e.details["r_F"] = part.blocks.size();
  e.details["power_modulus"] = part.modulus_used;
  e.provenance.push_back("census:f-conjugacy over the Galois image in units mod the exponent");
  return e;
}

KEntry wedderburn_entry(const FiniteGroup& g) {
  KEntry e;
  auto comps = wedderburn_shape(g);
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : comps) arr.push_back(c.to_string());
  e.details["components"] = arr;
  e.provenance.push_back("rule:wedderburn-shape:family");
  return e;
}

}  // namespace

KReport group_report(const FiniteGroup& g, const std::vector<std::string>& invariants,
                     const FieldDescriptor& field, std::uint64_t max_order) {
  for (const auto& inv : invariants)
    if (std::find(known_invariants().begin(), known_invariants().end(), inv) == known_invariants().end())
      fail(ErrorCode::InvalidArgument, "unknown invariant " + inv + " (wh, k0, kminus1, rf, wedderburn)");
  KReport r;
  r.group = g.name();
  r.extra["order"] = g.order();
  for (const auto& inv : known_invariants()) {
    if (std::find(invariants.begin(), invariants.end(), inv) == invariants.end()) continue;
    KEntry e;
    if (inv == "wh") e = guarded([&] { return wh_entry(g, max_order); });
    else if (inv == "k0") e = guarded([&] { return k0_entry(g); });
    else if (inv == "kminus1") e = guarded([&] { return kminus1_entry(g, max_order); });
    else if (inv == "rf") e = guarded([&] { return rf_entry(g, field, max_order); });
    else e = guarded([&] { return wedderburn_entry(g); });
    if (e.provenance.empty()) e.provenance.push_back("error:" + inv);
    r.entries.emplace_back(inv, std::move(e));
  }
  return r;
}

KReport group_report(const GroupRequest& req, std::uint64_t max_order) {
  return group_report(build_family_group(req.family, req.param), req.invariants, req.field, max_order);
}

// ---- classification and verification --------------------------------------------

namespace {

nlohmann::ordered_json descriptor_list(const std::vector<SubgroupDescriptor>& ds) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& d : ds) arr.push_back(d.to_json());
  return arr;
}

}  // namespace

nlohmann::ordered_json classify_json(std::uint64_t n, bool vc) {
  nlohmann::ordered_json j;
  j["schema"] = kSchema;
  j["n"] = n;
  j["maximal_finite"] = descriptor_list(maximal_finite_subgroups(n));
  if (!vc) return j;
  if (n == 4) {
    j["virtually_cyclic"] = descriptor_list(vc_classes_b4());
    j["maximal_virtually_cyclic"] = descriptor_list(maximal_vc_classes_b4());
  } else if (n % 2 == 1 && n >= 3) {
    j["virtually_cyclic"] = descriptor_list(virtually_cyclic_classes_odd(n));
  } else {
    fail(ErrorCode::Unsupported, "virtually cyclic classification is available for odd n >= 3 and n = 4");
  }
  return j;
}

nlohmann::ordered_json b4_verify_json(const std::string& suite) {
  auto reports = run_b4_suites(suite);
  nlohmann::ordered_json j;
  j["schema"] = kSchema;
  j["suite"] = suite;
  std::size_t passed = 0, total = 0;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    passed += r.passed();
    total += r.checks.size();
    arr.push_back(r.to_json());
  }
  j["passed"] = passed;
  j["total"] = total;
  j["all_passed"] = passed == total;
  j["suites"] = arr;
  return j;
}

}  // namespace lowk
