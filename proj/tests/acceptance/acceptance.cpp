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
// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Each criterion also has a wall-clock budget.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lowk/amalgam.hpp"
#include "lowk/b4.hpp"
#include "lowk/class_census.hpp"
#include "lowk/classifier.hpp"
#include "lowk/f_conjugacy.hpp"
#include "lowk/lower_k.hpp"
#include "lowk/report.hpp"

namespace {

using namespace lowk;

struct Outcome {
  bool pass = true;
  std::string detail;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail = what;
    pass = false;
  }
};

std::vector<FiniteGroup> families(std::uint64_t max_order) {
  std::vector<FiniteGroup> out;
  for (std::uint64_t m = 1; m <= max_order; ++m) out.push_back(build_cyclic(m));
  for (std::uint64_t m = 2; 4 * m <= max_order; ++m) out.push_back(build_dicyclic(m));
  for (auto k : {BinaryPolyhedral::T, BinaryPolyhedral::O, BinaryPolyhedral::I}) out.push_back(build_binary_polyhedral(k));
  return out;
}

const FieldDescriptor kQ = FieldDescriptor::rational();
FieldDescriptor Qp(std::uint64_t p) { return FieldDescriptor::padic(p); }
FieldDescriptor Fp(std::uint64_t p) { return FieldDescriptor::finite_prime(p); }
FiniteGroup T() { return build_binary_polyhedral(BinaryPolyhedral::T); }
FiniteGroup O() { return build_binary_polyhedral(BinaryPolyhedral::O); }
FiniteGroup I() { return build_binary_polyhedral(BinaryPolyhedral::I); }

Outcome whitehead_ranks() {
  Outcome o;
  auto agree = [&](const FiniteGroup& g) {
    auto closed = whitehead_rank_closed_form(g.family());
    o.expect(closed && *closed == whitehead_rank_census(g), "closed form differs from census for " + g.name());
  };
  for (std::uint64_t m = 1; m <= 50; ++m) agree(build_cyclic(m));
  for (std::uint64_t m = 2; m <= 25; ++m) agree(build_dicyclic(m));
  for (const auto& g : {T(), O(), I()}) agree(g);
  const std::vector<std::pair<FiniteGroup, std::uint64_t>> expected{
      {build_dicyclic(2), 0}, {build_dicyclic(4), 1}, {T(), 0}, {O(), 1}, {I(), 2}};
  for (const auto& [g, r] : expected) o.expect(whitehead_rank(g) == r, "Wh rank of " + g.name());
  return o;
}

Outcome r1_equals_r2() {
  Outcome o;
  std::size_t groups = 0;
  for (const auto& g : families(2000)) {
    auto c = conjugacy_classes(g, 2000);
    for (std::uint64_t d : {1, 2, 3, 4, 6}) {
      auto r1 = c.r1_by_order.count(d) ? c.r1_by_order.at(d) : 0;
      auto r2 = c.r2_by_order.count(d) ? c.r2_by_order.at(d) : 0;
      o.expect(r1 == r2, g.name() + " d = " + std::to_string(d));
    }
    ++groups;
  }
  if (o.pass) o.detail = std::to_string(groups) + " groups";
  return o;
}

Outcome f_conjugacy_counts() {
  Outcome o;
  auto eq = [&](const FiniteGroup& g, const FieldDescriptor& f, std::uint64_t want) {
    auto got = r_F(g, f);
    o.expect(got == want, "r_" + f.name() + "(" + g.name() + ") = " + std::to_string(got) + ", want " +
                              std::to_string(want));
  };
  for (std::uint64_t mu : {3, 5, 7, 11, 13}) {
    auto g = build_dicyclic(mu);
    auto lam = lambda(mu);
    eq(g, kQ, 5);
    eq(g, Qp(2), 2 * lam + 3);
    eq(g, Fp(2), lam + 1);
    eq(g, Qp(mu), mu % 4 == 1 ? 6 : 5);
    eq(g, Fp(mu), mu % 4 == 1 ? 4 : 3);
  }
  for (unsigned k = 3; k <= 7; ++k) {
    auto g = build_generalized_quaternion(k);
    eq(g, kQ, k + 2);
    eq(g, Qp(2), k + 2);
    eq(g, Fp(2), 1);
  }
  eq(T(), Qp(2), 5), eq(T(), Qp(3), 5), eq(T(), Fp(2), 2), eq(T(), Fp(3), 3);
  eq(O(), Qp(2), 7), eq(O(), Qp(3), 7), eq(O(), Fp(2), 2), eq(O(), Fp(3), 5);
  eq(I(), Qp(2), 7), eq(I(), Qp(3), 7), eq(I(), Qp(5), 7), eq(I(), Fp(2), 3), eq(I(), Fp(3), 5), eq(I(), Fp(5), 5);
  return o;
}

Outcome carter_and_k_minus_one() {
  Outcome o;
  using E = AbelianGroupExpr;
  auto eq = [&](const FiniteGroup& g, const E& want) {
    auto got = k_minus_one(g);
    o.expect(got == want, "K_-1(" + g.name() + ") = " + got.to_string() + ", want " + want.to_string());
  };
  eq(build_dicyclic(127), E::free(9));
  eq(build_dicyclic(257), E::cyclic(2) + E::free(16));
  eq(build_dicyclic(2), E::zero());
  eq(build_dicyclic(4), E::cyclic(2));
  eq(T(), E::free(1));
  eq(O(), E::cyclic(2) + E::free(1));
  eq(I(), E::cyclic(2) + E::free(2));
  auto start = std::chrono::steady_clock::now();
  auto big = build_dicyclic(8191);
  auto r = carter_rank(big);
  auto s = k_minus_one_torsion(big);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.expect(r == 315 && s == 0, "Dic_{4*8191}: rank " + std::to_string(r) + ", Z_2 count " + std::to_string(s));
  o.expect(secs < 1.0, "closed form for m = 8191 took " + std::to_string(secs) + " s");
  return o;
}

Outcome lambda_oracle() {
  Outcome o;
  for (std::uint64_t m = 3; m <= 60; m += 2) {
    if (!is_prime(m)) continue;
    auto g = build_dicyclic(m);
    std::uint64_t classes = 0;
    for (const auto& block : f_partition(g, Qp(2)).blocks) classes += g.order_of(block[0]) == m;
    o.expect(lambda(m) == classes, "lambda(" + std::to_string(m) + ")");
  }
  return o;
}

Outcome k0_table() {
  Outcome o;
  const std::map<std::uint64_t, std::uint64_t> dic{{2, 1}, {3, 1}, {4, 1}, {5, 1}, {6, 3}, {7, 1},
                                                   {8, 1}, {9, 2}, {10, 3}, {11, 1}};
  auto z2 = [](std::uint64_t k) { return AbelianGroupExpr::elementary(2, k); };
  for (auto [m, k] : dic) {
    auto r = k0_tilde_lookup(build_dicyclic(m));
    o.expect(r.known && r.value == z2(k), "Dic m = " + std::to_string(m));
  }
  for (std::uint64_t m = 12; m <= 40; ++m) o.expect(!k0_tilde_lookup(build_dicyclic(m)).known, "Dic m = " + std::to_string(m));
  o.expect(k0_tilde_lookup(T()).value == z2(1), "T*");
  o.expect(k0_tilde_lookup(O()).value == z2(2), "O*");
  o.expect(k0_tilde_lookup(I()).value == z2(3), "I*");
  const std::set<std::uint64_t> trivial{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 13, 14, 17, 19};
  for (std::uint64_t m = 1; m <= 60; ++m) {
    auto r = k0_tilde_lookup(build_cyclic(m));
    bool ok = trivial.count(m) ? (r.known && r.value.is_zero()) : !r.known;
    o.expect(ok, "Z_" + std::to_string(m));
  }
  return o;
}

Outcome b4_verify() {
  Outcome o;
  const std::set<std::string> required{
      "braid.commute13", "braid.braid12", "braid.braid23", "braid.surface", "alpha0.s1", "garside.s1",
      "conjgar.alpha0",  "sig1sig3",      "sig1.delta",    "sig2.delta",    "psi.sigma1", "psi.sigma2",
      "pi.sigma1",       "rho.sigma1_sq", "rho.sigma2_sq", "core.normal",   "gamma2.t.three_cycle",
      "z.action",        "z.infinite",    "z.pi",          "rs.s3.basis",   "rs.z6.basis", "rs.s3.rank", "rs.z6.rank"};
  std::set<std::string> seen;
  std::size_t total = 0, passed = 0, conjtau = 0;
  for (const auto& r : run_b4_suites("all"))
    for (const auto& c : r.checks) {
      ++total;
      passed += c.pass;
      seen.insert(c.id);
      conjtau += c.id.rfind("conjtau.", 0) == 0;
      o.expect(c.pass, r.suite + "/" + c.id);
    }
  for (const auto& id : required) o.expect(seen.count(id) == 1, "missing check " + id);
  o.expect(conjtau == 10, "expected 10 conjugation identities");
  if (o.pass) o.detail = std::to_string(passed) + "/" + std::to_string(total) + " checks";
  return o;
}

Outcome b4_report() {
  Outcome o;
  auto r = b4_lower_k_report();
  o.expect(r.at("wh").value->to_string() == "Z ⊕ Nil_1", "Wh");
  o.expect(r.at("k0").value->to_string() == "Z_2 ⊕ Nil_0", "K0");
  o.expect(*r.at("kminus1").value == AbelianGroupExpr::cyclic(2) + AbelianGroupExpr::free(1), "K_-1");
  auto j = r.to_json();
  for (const char* k : {"Nil_0", "Nil_1"})
    o.expect(j["nil"][k]["text"] == "⊕_∞[2(Z_2)^∞ ⊕ 2W]", std::string(k) + " text");
  o.expect(j.dump() == b4_lower_k_report().to_json().dump(), "report differs between runs");
  return o;
}

std::map<std::string, std::vector<std::string>> read_sections(const std::string& path) {
  std::ifstream in(path);
  std::map<std::string, std::vector<std::string>> out;
  std::string line, section;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (line.front() == '[' && line.back() == ']') section = line.substr(1, line.size() - 2);
    else out[section].push_back(line);
  }
  return out;
}

std::vector<std::string> sorted_names(const std::vector<SubgroupDescriptor>& ds) {
  std::vector<std::string> out;
  for (const auto& d : ds) out.push_back(d.name());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

Outcome classification(const std::string& golden_dir) {
  Outcome o;
  o.expect(sorted_names(maximal_finite_subgroups(4)) == sorted({"Q16", "T*"}), "n = 4");
  for (std::uint64_t n : {5, 7}) {
    auto g = read_sections(golden_dir + "/classify_n" + std::to_string(n) + ".txt");
    o.expect(!g["virtually_cyclic"].empty(), "golden file for n = " + std::to_string(n) + " missing");
    o.expect(sorted_names(maximal_finite_subgroups(n)) == sorted(g["maximal_finite"]),
             "maximal finite, n = " + std::to_string(n));
    o.expect(sorted_names(virtually_cyclic_classes_odd(n)) == sorted(g["virtually_cyclic"]),
             "virtually cyclic, n = " + std::to_string(n));
  }
  auto b4 = read_sections(golden_dir + "/vc_b4.txt");
  std::vector<std::string> all = b4["type_I"];
  all.insert(all.end(), b4["type_II"].begin(), b4["type_II"].end());
  o.expect(!all.empty() && sorted_names(vc_classes_b4()) == sorted(all), "B4 virtually cyclic list");
  return o;
}

Outcome amalgam_properties() {
  Outcome o;
  auto model = build_b4();
  const AmalgamSpec& s = *model.spec;
  std::mt19937_64 rng(20260101);
  auto random_word = [&](std::size_t max_len) {
    std::vector<FactorLetter> w(rng() % (max_len + 1));
    for (auto& l : w) {
      l.side = rng() % 2 ? Side::First : Side::Second;
      l.g = static_cast<Elem>(rng() % s.factor(l.side).group.order());
    }
    return w;
  };
  for (int i = 0; i < 10000 && o.pass; ++i) {
    auto w1 = random_word(12), w2 = random_word(12);
    auto r1 = s.reduce(w1), r2 = s.reduce(w2);
    auto joined = w1;
    joined.insert(joined.end(), w2.begin(), w2.end());
    o.expect(s.reduce(joined) == s.multiply(r1, r2), "reduce(w1 w2) != reduce(w1) reduce(w2)");
    o.expect(s.reduce(s.to_word(r1)) == r1, "normal form is not a fixed point");
  }
  for (int i = 0; i < 1000 && o.pass; ++i) {
    auto a = s.reduce(random_word(10)), b = s.reduce(random_word(10)), c = s.reduce(random_word(10));
    o.expect(s.multiply(s.multiply(a, b), c) == s.multiply(a, s.multiply(b, c)), "associativity");
  }
  // Exhaustive torsion check: an element has finite order iff its
  // lcm(exponents)-th power is trivial.
  const std::int64_t n = 24;
  std::size_t checked = 0;
  std::vector<FactorLetter> letters;
  std::function<void(std::size_t)> walk = [&](std::size_t remaining) {
    for (Elem f = 0; f < s.core().order(); ++f) {
      std::vector<FactorLetter> w{{Side::First, s.factor(Side::First).embedding[f]}};
      w.insert(w.end(), letters.begin(), letters.end());
      auto a = s.reduce(w);
      o.expect(a.letters.size() == letters.size(), "normal form lost letters");
      o.expect(s.has_finite_order(a) == (s.pow(a, n) == s.identity()), "torsion mismatch at " + s.to_string(a));
      ++checked;
    }
    if (remaining == 0) return;
    for (Side side : {Side::First, Side::Second}) {
      if (!letters.empty() && letters.back().side == side) continue;
      const auto& t = s.factor(side).transversal;
      for (std::size_t r = 1; r < t.size(); ++r) {
        letters.push_back({side, t[r]});
        walk(remaining - 1);
        letters.pop_back();
      }
    }
  };
  walk(6);
  if (o.pass) o.detail = std::to_string(checked) + " normal forms";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string golden_dir = argc > 1 ? argv[1] : LOWK_GOLDEN_DIR;
  struct Criterion {
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"Whitehead ranks: closed form equals census", 5, whitehead_ranks},
      {"r1(d) = r2(d) for d in {1,2,3,4,6}, |G| <= 2000", 10, r1_equals_r2},
      {"F-conjugacy counts", 30, f_conjugacy_counts},
      {"Carter ranks and K_-1", 5, carter_and_k_minus_one},
      {"lambda equals Q_2-class count, odd primes <= 60", 60, lambda_oracle},
      {"reduced K_0 lookup table", 5, k0_table},
      {"b4 verify --suite all", 10, b4_verify},
      {"b4 report", 5, b4_report},
      {"classification lists", 5, [&] { return classification(golden_dir); }},
      {"amalgam normal form, associativity and torsion", 60, amalgam_properties},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && secs > c.budget_seconds) {
      o.pass = false;
      o.detail = "over the time budget";
    }
    failures += !o.pass;
    std::printf("%s %zu: %s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", i + 1, c.name, secs,
                o.detail.empty() ? "" : " - ", o.detail.c_str());
  }
  return failures ? 1 : 0;
}
