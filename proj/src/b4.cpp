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
#include "lowk/b4.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "lowk/error.hpp"

namespace lowk {

// ---- S3 ---------------------------------------------------------------------

Perm3 Perm3::cycle(std::initializer_list<int> points) {
  Perm3 p;
  std::vector<int> pts(points);
  for (std::size_t i = 0; i < pts.size(); ++i)
    p.img[pts[i] - 1] = static_cast<std::uint8_t>(pts[(i + 1) % pts.size()] - 1);
  return p;
}

Perm3 Perm3::operator*(const Perm3& o) const {
  Perm3 r;
  for (int i = 0; i < 3; ++i) r.img[i] = img[o.img[i]];
  return r;
}

Perm3 Perm3::inverse() const {
  Perm3 r;
  for (int i = 0; i < 3; ++i) r.img[img[i]] = static_cast<std::uint8_t>(i);
  return r;
}

bool Perm3::is_three_cycle() const { return img[0] != 0 && img[1] != 1 && img[2] != 2; }

std::string Perm3::to_string() const {
  if (is_identity()) return "()";
  std::string out;
  std::array<bool, 3> seen{};
  for (int s = 0; s < 3; ++s) {
    if (seen[s] || img[s] == s) continue;
    out += "(" + std::to_string(s + 1);
    seen[s] = true;
    for (int c = img[s]; c != s; c = img[c]) {
      out += "," + std::to_string(c + 1);
      seen[c] = true;
    }
    out += ")";
  }
  return out;
}

namespace {

FiniteGroup build_s3(std::vector<Perm3>& perms) {
  perms.clear();
  std::array<std::uint8_t, 3> a{0, 1, 2};
  do perms.push_back(Perm3{a});
  while (std::next_permutation(a.begin(), a.end()));
  std::vector<std::vector<Elem>> table(6, std::vector<Elem>(6));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < 6; ++i) {
    names.push_back(perms[i].to_string());
    for (std::size_t j = 0; j < 6; ++j)
      table[i][j] = static_cast<Elem>(std::find(perms.begin(), perms.end(), perms[i] * perms[j]) - perms.begin());
  }
  return build_from_cayley_table(table, names);
}

Elem perm_id(const std::vector<Perm3>& perms, const Perm3& p) {
  return static_cast<Elem>(std::find(perms.begin(), perms.end(), p) - perms.begin());
}

}  // namespace

// ---- the model --------------------------------------------------------------

const AmalgamElement& B4Model::at(const std::string& name) const {
  auto it = named.find(name);
  if (it == named.end()) fail(ErrorCode::InvalidArgument, "no named B4 element " + name);
  return it->second;
}

AmalgamElement B4Model::word(const std::vector<std::string>& factors) const {
  AmalgamElement out = spec->identity();
  for (const auto& f : factors) {
    auto caret = f.find('^');
    std::int64_t k = caret == std::string::npos ? 1 : std::stoll(f.substr(caret + 1));
    out = spec->multiply(out, spec->pow(at(f.substr(0, caret)), k));
  }
  return out;
}

std::uint64_t element_order(const AmalgamSpec& spec, const AmalgamElement& a) {
  if (!spec.has_finite_order(a)) return 0;
  const std::uint64_t bound = std::lcm(spec.factor(Side::First).group.exponent(),
                                       spec.factor(Side::Second).group.exponent());
  AmalgamElement p = a;
  for (std::uint64_t k = 1; k <= bound; ++k) {
    if (p == spec.identity()) return k;
    p = spec.multiply(p, a);
  }
  fail(ErrorCode::Internal, "finite-order element exceeded the factor exponent bound");
}

B4Model build_b4() {
  FiniteGroup q8 = build_quaternion_units();
  FiniteGroup q16 = build_dicyclic(4);
  FiniteGroup ts = build_binary_polyhedral(BinaryPolyhedral::T);
  const Elem u = dicyclic_element(4, 1, 0), v = dicyclic_element(4, 0, 1);

  // First p, q, r in id order satisfying the T* relations over Q8.
  Elem p = 0, q = 0, r = 0;
  bool found = false;
  for (Elem cp = 0; cp < ts.order() && !found; ++cp) {
    if (ts.order_of(cp) != 4) continue;
    for (Elem cq = 0; cq < ts.order() && !found; ++cq) {
      if (ts.order_of(cq) != 4 || cq == cp || cq == ts.inv(cp) || ts.conj(cq, cp) != ts.inv(cp)) continue;
      for (Elem cr = 0; cr < ts.order() && !found; ++cr) {
        if (ts.order_of(cr) != 3 || ts.conj(cr, cp) != cq || ts.conj(cr, cq) != ts.mul(cp, cq)) continue;
        p = cp, q = cq, r = cr;
        found = true;
      }
    }
  }
  if (!found) fail(ErrorCode::Internal, "no p, q, r in T* satisfy the amalgam relations");

  AmalgamFactor first{q16, extend_homomorphism(q8, {quat::kI, quat::kJ}, q16, {q16.mul(u, u), v}),
                      {q16.identity(), u}, {"", "u"}};
  AmalgamFactor second{ts, extend_homomorphism(q8, {quat::kI, quat::kJ}, ts, {p, q}),
                       {ts.identity(), r, ts.mul(r, r)}, {"", "r", "r^2"}};

  B4Model m;
  m.spec = std::make_shared<const AmalgamSpec>(q8, std::move(first), std::move(second));
  const AmalgamSpec& s = *m.spec;
  auto& n = m.named;
  n["alpha0"] = s.from_factor(Side::First, q16.inv(u));
  n["Delta4"] = s.from_factor(Side::First, v);
  n["ft"] = s.from_core(quat::kMinusOne);
  n["alpha1"] = s.multiply(n["ft"], s.from_factor(Side::Second, ts.inv(r)));
  const AmalgamElement a0inv = s.invert(n["alpha0"]);
  n["sigma3"] = s.multiply(a0inv, n["alpha1"]);
  n["sigma2"] = s.conjugate(a0inv, n["sigma3"]);
  n["sigma1"] = s.conjugate(a0inv, n["sigma2"]);
  n["alpha2"] = m.word({"sigma1", "sigma2^2"});
  n["x"] = m.word({"alpha0^2", "Delta4", "sigma1^2"});
  n["y"] = m.word({"Delta4", "sigma2^2"});
  n["z"] = m.word({"sigma2^7", "sigma1"});

  auto core_of = [&](const AmalgamElement& a) {
    auto c = s.as_core(a);
    if (!c) fail(ErrorCode::Internal, "expected a core element, got " + s.to_string(a));
    return *c;
  };
  const Elem a02 = core_of(m.word({"alpha0^2"})), d4 = core_of(n["Delta4"]);
  m.Q = generated_core_subgroup(q8, {a02, d4});
  m.H = {generated_core_subgroup(q8, {d4}), generated_core_subgroup(q8, {a02}),
         generated_core_subgroup(q8, {q8.mul(a02, d4)})};

  std::vector<AmalgamElement> qp{s.identity()};
  const std::vector<AmalgamElement> qp_gens{m.word({"alpha0^2"}), m.word({"alpha0", "Delta4"})};
  for (std::size_t i = 0; i < qp.size(); ++i)
    for (const auto& g : qp_gens) {
      AmalgamElement h = s.multiply(qp[i], g);
      if (std::find(qp.begin(), qp.end(), h) == qp.end()) qp.push_back(h);
    }
  m.Q_prime = qp;

  if (element_order(s, n["alpha0"]) != 8) fail(ErrorCode::Internal, "alpha0 does not have order 8");
  if (element_order(s, n["Delta4"]) != 4) fail(ErrorCode::Internal, "Delta4 does not have order 4");
  if (s.pow(n["alpha0"], 4) != n["ft"]) fail(ErrorCode::Internal, "alpha0^4 is not the full twist");
  if (m.Q.size() != 8) fail(ErrorCode::Internal, "<alpha0^2, Delta4> is not the whole core");
  return m;
}

FreeProductWord rho(const B4Model& m, const AmalgamElement& g) {
  using L = FreeProductWord::Letter;
  std::vector<L> out;
  const auto& labels = m.spec->factor(Side::Second).labels;
  for (const auto& l : g.letters) {
    if (l.side == Side::First) out.push_back(L::B);
    else out.push_back(labels.at(l.rep) == "r" ? L::A2 : L::A);
  }
  return FreeProductWord::from_letters(out);
}

unsigned pi_tilde(const FreeProductWord& w) {
  using L = FreeProductWord::Letter;
  unsigned s = 0;
  for (auto l : w.letters()) s += l == L::A ? 4 : l == L::A2 ? 2 : 3;
  return s % 6;
}

unsigned pi(const B4Model& m, const AmalgamElement& g) { return pi_tilde(rho(m, g)); }

Perm3 psi_hat(const FreeProductWord& w) {
  using L = FreeProductWord::Letter;
  const Perm3 a = Perm3::cycle({1, 2, 3}), b = Perm3::cycle({1, 3});
  Perm3 out;
  for (auto l : w.letters()) out = out * (l == L::B ? b : l == L::A ? a : a * a);
  return out;
}

Perm3 psi(const B4Model& m, const AmalgamElement& g) {
  Perm3 out;
  for (int i = 0; i < 3; ++i) {
    auto image = m.spec->conjugate_subgroup(g, m.H[i]);
    if (!image) fail(ErrorCode::Internal, "conjugate of an order-4 core subgroup left the core");
    auto it = std::find(m.H.begin(), m.H.end(), *image);
    if (it == m.H.end()) fail(ErrorCode::Internal, "conjugate of H" + std::to_string(i + 1) + " is not some H_j");
    out.img[i] = static_cast<std::uint8_t>(it - m.H.begin());
  }
  return out;
}

// ---- reports ------------------------------------------------------------------

bool CheckReport::all_passed() const { return passed() == checks.size(); }

std::size_t CheckReport::passed() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.pass; }));
}

nlohmann::ordered_json CheckReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["passed"] = passed();
  j["total"] = checks.size();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json e;
    e["check_id"] = c.id;
    e["statement"] = c.statement;
    e["status"] = c.pass ? "pass" : "fail";
    if (!c.witness.empty()) e["witness_normal_form"] = c.witness;
    arr.push_back(e);
  }
  j["checks"] = arr;
  return j;
}

namespace {

class Recorder {
 public:
  Recorder(std::string suite, const AmalgamSpec& spec) : spec_(spec) { report_.suite = std::move(suite); }

  void equal(const std::string& id, const std::string& statement, const AmalgamElement& lhs,
             const AmalgamElement& rhs) {
    bool ok = lhs == rhs;
    std::string w = spec_.to_string(lhs);
    if (!ok) w += " != " + spec_.to_string(rhs);
    report_.checks.push_back({id, statement, ok, w});
  }

  void truth(const std::string& id, const std::string& statement, bool ok, std::string witness = "") {
    report_.checks.push_back({id, statement, ok, std::move(witness)});
  }

  CheckReport take() { return std::move(report_); }

 private:
  const AmalgamSpec& spec_;
  CheckReport report_;
};

// Checks the core is normal element by element: g q g^-1 has no letters.
bool core_normal_under(const AmalgamSpec& s, const std::vector<AmalgamElement>& gens) {
  for (const auto& g : gens)
    for (Elem q = 0; q < s.core().order(); ++q)
      if (!s.conjugate(g, s.from_core(q)).letters.empty()) return false;
  return true;
}

std::vector<AmalgamElement> factor_generators(const AmalgamSpec& s) {
  std::vector<AmalgamElement> out;
  for (Side side : {Side::First, Side::Second})
    for (auto g : s.factor(side).group.generators()) out.push_back(s.from_factor(side, g));
  return out;
}

}  // namespace

CheckReport verify_braid_presentation(const B4Model& m) {
  const AmalgamSpec& s = *m.spec;
  Recorder rec("braid", s);
  auto w = [&](std::vector<std::string> f) { return m.word(f); };
  const AmalgamElement e = s.identity(), ft = m.at("ft");

  rec.equal("braid.commute13", "σ1σ3 = σ3σ1", w({"sigma1", "sigma3"}), w({"sigma3", "sigma1"}));
  rec.equal("braid.braid12", "σ1σ2σ1 = σ2σ1σ2", w({"sigma1", "sigma2", "sigma1"}), w({"sigma2", "sigma1", "sigma2"}));
  rec.equal("braid.braid23", "σ2σ3σ2 = σ3σ2σ3", w({"sigma2", "sigma3", "sigma2"}), w({"sigma3", "sigma2", "sigma3"}));
  rec.equal("braid.surface", "σ1σ2σ3²σ2σ1 = 1", w({"sigma1", "sigma2", "sigma3^2", "sigma2", "sigma1"}), e);

  rec.equal("twist.s1s2s1", "(σ1σ2σ1)² = ft", s.pow(w({"sigma1", "sigma2", "sigma1"}), 2), ft);
  rec.equal("twist.s1s2", "(σ1σ2)³ = ft", s.pow(w({"sigma1", "sigma2"}), 3), ft);
  rec.equal("twist.s2s1", "(σ2σ1)³ = ft", s.pow(w({"sigma2", "sigma1"}), 3), ft);
  rec.equal("twist.s1s3inv", "(σ1σ3⁻¹)² = ft", s.pow(w({"sigma1", "sigma3^-1"}), 2), ft);
  rec.equal("twist.delta", "Δ4² = ft", s.pow(m.at("Delta4"), 2), ft);

  rec.equal("defs.alpha0", "α0 = σ1σ2σ3", m.at("alpha0"), w({"sigma1", "sigma2", "sigma3"}));
  rec.equal("defs.alpha1", "α1 = σ1σ2σ3²", m.at("alpha1"), w({"sigma1", "sigma2", "sigma3^2"}));
  rec.equal("defs.delta4", "Δ4 = σ1σ2σ3σ1σ2σ1", m.at("Delta4"),
            w({"sigma1", "sigma2", "sigma3", "sigma1", "sigma2", "sigma1"}));
  rec.equal("defs.alpha1_square", "α1 = ft·α1⁻²", m.at("alpha1"), s.multiply(ft, s.pow(m.at("alpha1"), -2)));

  auto order_check = [&](const std::string& id, const std::string& name, const std::string& label, std::uint64_t want) {
    std::uint64_t got = element_order(s, m.at(name));
    rec.truth(id, "ord " + label + " = " + std::to_string(want), got == want, "order " + std::to_string(got));
  };
  order_check("orders.alpha0", "alpha0", "α0", 8);
  order_check("orders.alpha1", "alpha1", "α1", 6);
  order_check("orders.alpha2", "alpha2", "α2", 4);
  order_check("orders.delta4", "Delta4", "Δ4", 4);
  rec.equal("orders.alpha0_fourth", "α0⁴ = ft", s.pow(m.at("alpha0"), 4), ft);

  bool central = true;
  for (const auto& g : factor_generators(s)) central = central && s.multiply(g, ft) == s.multiply(ft, g);
  rec.truth("center.ft_central", "ft commutes with both factors", central, s.to_string(ft));
  // Finite-order elements are conjugate into a factor, so ft is the only
  // involution iff each factor has a unique involution and it is ft.
  bool unique = true;
  for (Side side : {Side::First, Side::Second}) {
    const auto& fac = s.factor(side);
    for (Elem g = 0; g < fac.group.order(); ++g)
      if (fac.group.order_of(g) == 2) unique = unique && g == fac.embedding[quat::kMinusOne];
  }
  rec.truth("center.ft_unique_involution", "ft is the unique element of order 2", unique, s.to_string(ft));
  return rec.take();
}

CheckReport verify_action_tables(const B4Model& m) {
  const AmalgamSpec& s = *m.spec;
  Recorder rec("actions", s);
  auto w = [&](std::vector<std::string> f) { return m.word(f); };
  auto cj = [&](std::vector<std::string> g, std::vector<std::string> a) { return s.conjugate(w(g), w(a)); };
  const AmalgamElement ft = m.at("ft");

  rec.equal("alpha0.s1", "α0σ1α0⁻¹ = σ2", cj({"alpha0"}, {"sigma1"}), w({"sigma2"}));
  rec.equal("alpha0.s2", "α0σ2α0⁻¹ = σ3", cj({"alpha0"}, {"sigma2"}), w({"sigma3"}));
  rec.equal("alpha0.s3", "α0²σ3α0⁻² = σ1", cj({"alpha0^2"}, {"sigma3"}), w({"sigma1"}));
  rec.equal("garside.s1", "Δ4σ1Δ4⁻¹ = σ3", cj({"Delta4"}, {"sigma1"}), w({"sigma3"}));
  rec.equal("garside.s2", "Δ4σ2Δ4⁻¹ = σ2", cj({"Delta4"}, {"sigma2"}), w({"sigma2"}));
  rec.equal("garside.s3", "Δ4σ3Δ4⁻¹ = σ1", cj({"Delta4"}, {"sigma3"}), w({"sigma1"}));
  rec.equal("conjgar.alpha0", "Δ4α0Δ4⁻¹ = α0⁻¹", cj({"Delta4"}, {"alpha0"}), w({"alpha0^-1"}));
  rec.equal("sig1sig3", "α0⁻²Δ4 = σ1σ3⁻¹", w({"alpha0^-2", "Delta4"}), w({"sigma1", "sigma3^-1"}));
  rec.equal("tstar.delta", "α1²Δ4α1⁻² = σ1σ3⁻¹", cj({"alpha1^2"}, {"Delta4"}), w({"sigma1", "sigma3^-1"}));
  rec.equal("tstar.s1s3inv", "α1²σ1σ3⁻¹α1⁻² = α0⁻²", cj({"alpha1^2"}, {"sigma1", "sigma3^-1"}), w({"alpha0^-2"}));

  rec.equal("sig1.alpha0sq", "σ1α0²σ1⁻¹ = Δ4⁻¹", cj({"sigma1"}, {"alpha0^2"}), w({"Delta4^-1"}));
  rec.equal("sig1.delta_inv", "σ1Δ4⁻¹σ1⁻¹ = α0⁻²", cj({"sigma1"}, {"Delta4^-1"}), w({"alpha0^-2"}));
  rec.equal("sig1.delta", "σ1Δ4σ1⁻¹ = α0²", cj({"sigma1"}, {"Delta4"}), w({"alpha0^2"}));
  rec.equal("sig1.alpha0sq_delta", "σ1α0²Δ4σ1⁻¹ = α0²Δ4", cj({"sigma1"}, {"alpha0^2", "Delta4"}),
            w({"alpha0^2", "Delta4"}));
  rec.equal("sig2.alpha0sq", "σ2α0²σ2⁻¹ = (α0²Δ4)⁻¹", cj({"sigma2"}, {"alpha0^2"}),
            s.invert(w({"alpha0^2", "Delta4"})));
  rec.equal("sig2.delta", "σ2Δ4σ2⁻¹ = Δ4", cj({"sigma2"}, {"Delta4"}), w({"Delta4"}));
  rec.equal("sig2.alpha0sq_delta", "σ2α0²Δ4σ2⁻¹ = α0²", cj({"sigma2"}, {"alpha0^2", "Delta4"}), w({"alpha0^2"}));
  bool fourth = true;
  for (auto q : m.Q) fourth = fourth && s.conjugate(w({"sigma2^4"}), s.from_core(q)) == s.from_core(q);
  rec.truth("sig2.fourth_power", "σ2⁴ acts trivially on Q", fourth);

  // Coset representatives of ker psi and their action on x, y.
  struct Tau {
    const char* id;
    const char* label;
    std::vector<std::string> word;
    AmalgamElement x_image, y_image;
  };
  const AmalgamElement x = m.at("x"), y = m.at("y");
  const AmalgamElement xi = s.invert(x), yi = s.invert(y);
  auto mul = [&](const AmalgamElement& a, const AmalgamElement& b) { return s.multiply(a, b); };
  const std::vector<Tau> taus{
      {"s1", "σ1", {"sigma1"}, x, mul(yi, xi)},
      {"s2", "σ2", {"sigma2"}, mul(ft, mul(xi, yi)), y},
      {"s1s2s1", "σ1σ2σ1", {"sigma1", "sigma2", "sigma1"}, mul(ft, y), mul(ft, x)},
      {"s1s2", "σ1σ2", {"sigma1", "sigma2"}, mul(ft, y), mul(yi, xi)},
      {"s2s1", "σ2σ1", {"sigma2", "sigma1"}, mul(ft, mul(xi, yi)), mul(ft, x)},
  };
  const std::map<std::string, std::string> x_rhs{{"s1", "x"}, {"s2", "ft x⁻¹y⁻¹"}, {"s1s2s1", "ft y"},
                                                 {"s1s2", "ft y"}, {"s2s1", "ft x⁻¹y⁻¹"}};
  const std::map<std::string, std::string> y_rhs{{"s1", "y⁻¹x⁻¹"}, {"s2", "y"}, {"s1s2s1", "ft x"},
                                                 {"s1s2", "y⁻¹x⁻¹"}, {"s2s1", "ft x"}};
  for (const auto& t : taus) {
    AmalgamElement tau = w(t.word);
    rec.equal(std::string("conjtau.") + t.id + ".x", std::string(t.label) + " x (" + t.label + ")⁻¹ = " + x_rhs.at(t.id),
              s.conjugate(tau, x), t.x_image);
    rec.equal(std::string("conjtau.") + t.id + ".y", std::string(t.label) + " y (" + t.label + ")⁻¹ = " + y_rhs.at(t.id),
              s.conjugate(tau, y), t.y_image);
  }

  auto psi_check = [&](const std::string& id, const std::string& label, const AmalgamElement& g, Perm3 want) {
    Perm3 got = psi(m, g);
    rec.truth(id, "ψ(" + label + ") = " + want.to_string(), got == want, got.to_string());
  };
  psi_check("psi.sigma1", "σ1", m.at("sigma1"), Perm3::cycle({1, 2}));
  psi_check("psi.sigma2", "σ2", m.at("sigma2"), Perm3::cycle({2, 3}));
  psi_check("psi.sigma3", "σ3", m.at("sigma3"), Perm3::cycle({1, 2}));
  psi_check("psi.alpha0", "α0", m.at("alpha0"), Perm3::cycle({1, 3}));
  bool q_trivial = true;
  for (auto q : m.Q) q_trivial = q_trivial && psi(m, s.from_core(q)).is_identity();
  rec.truth("psi.core", "ψ(q) = () for every q in Q", q_trivial);
  bool factors = true;
  for (const auto& name : {"sigma1", "sigma2", "sigma3", "alpha0", "alpha1", "Delta4", "z"})
    factors = factors && psi(m, m.at(name)) == psi_hat(rho(m, m.at(name)));
  rec.truth("psi.factors_through_rho", "ψ = ψ̂∘ρ on σ1, σ2, σ3, α0, α1, Δ4, z", factors);

  auto pi_check = [&](const std::string& id, const std::string& label, const AmalgamElement& g, unsigned want) {
    unsigned got = pi(m, g);
    rec.truth(id, "π(" + label + ") = " + std::to_string(want) + " mod 6", got == want, std::to_string(got));
  };
  pi_check("pi.alpha0", "α0", m.at("alpha0"), 3);
  pi_check("pi.delta4", "Δ4", m.at("Delta4"), 0);
  pi_check("pi.sigma1", "σ1", m.at("sigma1"), 1);
  bool pi_core = true;
  for (auto q : m.Q) pi_core = pi_core && pi(m, s.from_core(q)) == 0;
  rec.truth("pi.core", "π(q) = 0 for every q in Q", pi_core);
  unsigned pxy3 = pi(m, w({"x", "y^3"}));
  rec.truth("pi.xy3", "π(xy³) ∉ {0, 3}", pxy3 != 0 && pxy3 != 3, std::to_string(pxy3));

  auto rho_check = [&](const std::string& id, const std::string& label, const AmalgamElement& g, const std::string& want) {
    FreeProductWord got = rho(m, g);
    rec.truth(id, "ρ(" + label + ") = " + want, got == FreeProductWord::parse(want), got.to_string());
  };
  rho_check("rho.sigma1", "σ1", m.at("sigma1"), "ba");
  rho_check("rho.sigma1_sq", "σ1²", w({"sigma1^2"}), "baba");
  rho_check("rho.sigma3_sq", "σ3²", w({"sigma3^2"}), "baba");
  rho_check("rho.sigma2_sq", "σ2²", w({"sigma2^2"}), "abab");
  rho_check("rho.alpha0", "α0", m.at("alpha0"), "b");
  rho_check("rho.alpha1", "α1", m.at("alpha1"), "a");
  bool rho_core = true;
  for (auto q : m.Q) rho_core = rho_core && rho(m, s.from_core(q)).is_identity();
  rec.truth("rho.core", "ρ(q) = 1 for every q in Q", rho_core);

  std::vector<AmalgamElement> gens = factor_generators(s);
  for (const auto& name : {"sigma1", "sigma2", "sigma3", "alpha0", "alpha1", "Delta4"}) gens.push_back(m.at(name));
  rec.truth("core.normal", "Q is normal: g q g⁻¹ ∈ Q for factor generators, σi, α0, α1, Δ4",
            s.core_is_normal() && core_normal_under(s, gens));

  bool qp_ok = m.Q_prime.size() == 8;
  std::size_t order4 = 0, outside_core = 0;
  for (const auto& g : m.Q_prime) {
    order4 += element_order(s, g) == 4 ? 1 : 0;
    outside_core += g.letters.empty() ? 0 : 1;
  }
  qp_ok = qp_ok && order4 == 6 && outside_core == 4;
  rec.truth("qprime", "Q' = <α0², α0Δ4> has order 8 with six elements of order 4, and Q' ≠ Q", qp_ok,
            "|Q'| = " + std::to_string(m.Q_prime.size()) + ", order-4 elements " + std::to_string(order4));
  return rec.take();
}

std::shared_ptr<const AmalgamSpec> build_gamma(int i) {
  if (i != 1 && i != 2) fail(ErrorCode::InvalidArgument, "Gamma index must be 1 or 2");
  FiniteGroup q8 = build_quaternion_units();
  FiniteGroup q16 = build_dicyclic(4);
  const Elem gx = dicyclic_element(4, 1, 0), gy = dicyclic_element(4, 0, 1);
  const Elem sq = q16.mul(gx, gx);
  AmalgamFactor first{q16, extend_homomorphism(q8, {quat::kI, quat::kJ}, q16, {sq, gy}),
                      {q16.identity(), gx}, {"", "a"}};
  // Gamma_1: x^2 = a^2, y = b. Gamma_2: x^2 = b, y = a^2 b, so a^2 = y x^-2.
  std::vector<Elem> images = i == 1 ? std::vector<Elem>{sq, gy} : std::vector<Elem>{q16.mul(gy, q16.inv(sq)), sq};
  AmalgamFactor second{q16, extend_homomorphism(q8, {quat::kI, quat::kJ}, q16, images),
                       {q16.identity(), gx}, {"", "x"}};
  return std::make_shared<const AmalgamSpec>(q8, std::move(first), std::move(second));
}

CheckReport verify_gamma_identities() {
  CheckReport out;
  out.suite = "gamma";
  for (int i : {1, 2}) {
    auto sp = build_gamma(i);
    const AmalgamSpec& s = *sp;
    Recorder rec("gamma", s);
    const Elem ga = dicyclic_element(4, 1, 0);
    auto A = [&](std::int64_t k, unsigned bexp) { return s.from_factor(Side::First, dicyclic_element(4, k, bexp)); };
    const AmalgamElement a = s.from_factor(Side::First, ga), x = s.from_factor(Side::Second, ga);
    const AmalgamElement t = s.multiply(s.invert(a), x);
    const std::string pre = "gamma" + std::to_string(i) + ".";
    const std::string G = "Γ" + std::to_string(i) + ": ";
    const AmalgamElement a2 = A(2, 0), b = A(0, 1), a2b = A(2, 1);
    if (i == 1) {
      rec.equal(pre + "t.a2", G + "(a⁻¹x)a²(a⁻¹x)⁻¹ = a²", s.conjugate(t, a2), a2);
      rec.equal(pre + "t.b", G + "(a⁻¹x)b(a⁻¹x)⁻¹ = b", s.conjugate(t, b), b);
      rec.equal(pre + "t.a2b", G + "(a⁻¹x)a²b(a⁻¹x)⁻¹ = a²b", s.conjugate(t, a2b), a2b);
      const AmalgamElement u = s.multiply(x, t);
      rec.equal(pre + "u.a2", G + "(xa⁻¹x)a²(xa⁻¹x)⁻¹ = a²", s.conjugate(u, a2), a2);
      rec.equal(pre + "u.b", G + "(xa⁻¹x)b(xa⁻¹x)⁻¹ = a²b", s.conjugate(u, b), a2b);
      rec.equal(pre + "u.a2b", G + "(xa⁻¹x)a²b(xa⁻¹x)⁻¹ = b⁻¹", s.conjugate(u, a2b), s.invert(b));
      // x^-1 (x a^-1 x) x = a^-1 x^2 = a, so this element has finite order.
      rec.equal(pre + "u.conjugate", G + "x⁻¹(xa⁻¹x)x = a", s.conjugate(s.invert(x), u), a);
      std::uint64_t ord = element_order(s, u);
      rec.truth(pre + "u.order", G + "xa⁻¹x has order 8", ord == 8, "order " + std::to_string(ord));
    } else {
      const std::vector<AmalgamElement> trio{a2, s.invert(b), s.multiply(A(-2, 0), s.invert(b))};
      std::vector<int> image(3, -1);
      for (int k = 0; k < 3; ++k) {
        AmalgamElement c = s.conjugate(t, trio[k]);
        for (int l = 0; l < 3; ++l)
          if (c == trio[l]) image[k] = l;
      }
      bool cyc = image[0] >= 0 && image[1] >= 0 && image[2] >= 0 && image[0] != 0 && image[1] != 1 &&
                 image[2] != 2 && image[0] != image[1];
      rec.truth(pre + "t.three_cycle", G + "conjugation by a⁻¹x permutes a², b⁻¹, a⁻²b⁻¹ cyclically", cyc,
                s.to_string(s.conjugate(t, a2)));
      std::vector<AmalgamElement> orbit{a2};
      for (AmalgamElement c = s.conjugate(t, a2); c != a2 && orbit.size() < 16; c = s.conjugate(t, c))
        orbit.push_back(c);
      rec.truth(pre + "t.orbit", G + "the a⁻¹x-conjugation orbit of a² has size 3", orbit.size() == 3,
                "size " + std::to_string(orbit.size()));
    }
    rec.truth(pre + "t.infinite", G + "a⁻¹x has infinite order", !s.has_finite_order(t), s.to_string(t));
    rec.truth(pre + "core.normal", G + "Q8 is normal in both factors",
              s.core_is_normal() && core_normal_under(s, factor_generators(s)));
    auto part = rec.take();
    out.checks.insert(out.checks.end(), part.checks.begin(), part.checks.end());
  }
  return out;
}

CheckReport verify_kernel(const B4Model& m) {
  const AmalgamSpec& s = *m.spec;
  Recorder rec("kernel", s);
  const AmalgamElement x = m.at("x"), y = m.at("y"), z = m.at("z");

  for (const auto& [name, g] : {std::pair{"x", x}, std::pair{"y", y}}) {
    bool comm = true;
    for (auto q : m.Q) comm = comm && s.multiply(g, s.from_core(q)) == s.multiply(s.from_core(q), g);
    rec.truth(std::string("kernel.") + name + ".commutes", std::string(name) + " commutes with all 8 elements of Q", comm,
              s.to_string(g));
    rec.truth(std::string("kernel.") + name + ".psi", std::string("ψ(") + name + ") = ()", psi(m, g).is_identity(),
              psi(m, g).to_string());
    rec.truth(std::string("kernel.") + name + ".infinite", std::string(name) + " has infinite order",
              !s.has_finite_order(g));
  }
  rec.truth("kernel.rho_x", "ρ(x) = (ba)²", rho(m, x) == FreeProductWord::parse("baba"), rho(m, x).to_string());
  rec.truth("kernel.rho_y", "ρ(y) = (ab)²", rho(m, y) == FreeProductWord::parse("abab"), rho(m, y).to_string());

  // Reduced words in x^±1, y^±1 of length <= 6.
  const std::vector<AmalgamElement> gens{x, s.invert(x), y, s.invert(y)};
  std::set<std::pair<Elem, std::vector<std::pair<int, std::uint32_t>>>> forms;
  std::size_t words = 0;
  std::vector<std::pair<AmalgamElement, int>> frontier{{s.identity(), -1}};
  auto key = [](const AmalgamElement& e) {
    std::vector<std::pair<int, std::uint32_t>> k;
    for (const auto& l : e.letters) k.emplace_back(static_cast<int>(l.side), l.rep);
    return std::pair{e.core, k};
  };
  forms.insert(key(s.identity()));
  words = 1;
  for (int len = 1; len <= 6; ++len) {
    std::vector<std::pair<AmalgamElement, int>> next;
    for (const auto& [e, last] : frontier)
      for (int g = 0; g < 4; ++g) {
        if (last >= 0 && (g ^ 1) == last) continue;
        AmalgamElement f = s.multiply(e, gens[g]);
        forms.insert(key(f));
        ++words;
        next.emplace_back(f, g);
      }
    frontier = std::move(next);
  }
  rec.truth("kernel.free", "the 1457 reduced words in x, y of length ≤ 6 have distinct normal forms",
            words == 1457 && forms.size() == words,
            std::to_string(forms.size()) + " distinct of " + std::to_string(words));

  Perm3 pz = psi(m, z);
  rec.truth("z.psi", "ψ(z) is a 3-cycle", pz.is_three_cycle(), pz.to_string());
  const std::vector<AmalgamElement> trio{m.word({"alpha0^2"}), m.word({"Delta4^-1"}),
                                         s.invert(m.word({"alpha0^2", "Delta4"}))};
  std::vector<int> image(3, -1);
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l)
      if (s.conjugate(z, trio[k]) == trio[l]) image[k] = l;
  bool cyc = image[0] > 0 && image[1] >= 0 && image[1] != 1 && image[2] >= 0 && image[2] != 2 && image[0] != image[1];
  rec.truth("z.permutes", "z permutes α0², Δ4⁻¹, (α0²Δ4)⁻¹ cyclically", cyc,
            "α0² -> " + s.to_string(s.conjugate(z, trio[0])));
  bool same_action = true;
  const AmalgamElement z3 = m.word({"sigma2^3", "sigma1"});
  for (auto q : m.Q) same_action = same_action && s.conjugate(z, s.from_core(q)) == s.conjugate(z3, s.from_core(q));
  rec.truth("z.action", "z acts on Q as σ2³σ1", same_action);
  rec.truth("z.infinite", "z has infinite order", !s.has_finite_order(z), s.to_string(z));
  AmalgamElement zc = s.pow(z, 3);
  rec.truth("z.cube", "z³ ≠ 1", zc != s.identity(), s.to_string(zc));
  rec.truth("z.pi", "π(z) = 2 mod 6", pi(m, z) == 2, std::to_string(pi(m, z)));
  return rec.take();
}

CheckReport verify_reidemeister_schreier() {
  CheckReport out;
  out.suite = "rs";
  std::vector<FreeProductWord> transversal;
  for (const char* w : {"1", "a", "a^2", "b", "ab", "a^2b"}) transversal.push_back(FreeProductWord::parse(w));

  std::vector<Perm3> perms;
  FiniteGroup s3 = build_s3(perms);
  struct Case {
    std::string id, label;
    FreeProductQuotient q;
    std::vector<std::string> basis;
  };
  const std::vector<Case> cases{
      {"rs.s3", "ker(ψ̂: Z3∗Z2 → S3)",
       {s3, perm_id(perms, Perm3::cycle({1, 2, 3})), perm_id(perms, Perm3::cycle({1, 3}))},
       {"abab", "baba"}},
      {"rs.z6", "ker(π̃: Z3∗Z2 → Z6)", {build_cyclic(6), 4, 3}, {"baba^2", "ba^2ba"}},
  };
  for (const auto& c : cases) {
    SchreierCertificate cert = reidemeister_schreier(c.q, transversal);
    std::string gens;
    for (const auto& g : cert.nontrivial) gens += (gens.empty() ? "" : ", ") + g.value.to_string();
    out.checks.push_back({c.id + ".rank", c.label + " is free of rank 1 + 6/6 = 2",
                          cert.rank == 2 && cert.euler_rank == 2, "Schreier generators: " + gens});
    std::vector<FreeProductWord> claimed;
    std::string basis;
    for (const auto& b : c.basis) {
      claimed.push_back(FreeProductWord::parse(b));
      basis += (basis.empty() ? "" : ", ") + b;
    }
    out.checks.push_back({c.id + ".basis", c.label + " has basis {" + basis + "}", is_schreier_basis(cert, claimed),
                          "Schreier generators: " + gens});
  }
  return out;
}

const std::vector<std::string>& b4_suite_names() {
  static const std::vector<std::string> names{"braid", "actions", "gamma", "kernel", "rs"};
  return names;
}

std::vector<CheckReport> run_b4_suites(const std::string& suite) {
  const auto& names = b4_suite_names();
  if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end())
    fail(ErrorCode::InvalidArgument, "unknown suite " + suite + " (braid, actions, gamma, kernel, rs, all)");
  std::vector<CheckReport> out;
  const bool need_model = suite != "gamma" && suite != "rs";
  std::optional<B4Model> model;
  if (need_model) model = build_b4();
  for (const auto& n : names) {
    if (suite != "all" && suite != n) continue;
    if (n == "braid") out.push_back(verify_braid_presentation(*model));
    else if (n == "actions") out.push_back(verify_action_tables(*model));
    else if (n == "gamma") out.push_back(verify_gamma_identities());
    else if (n == "kernel") out.push_back(verify_kernel(*model));
    else out.push_back(verify_reidemeister_schreier());
  }
  return out;
}

}  // namespace lowk
