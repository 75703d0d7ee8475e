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
#include "lowk/free_product.hpp"

#include <algorithm>
#include <functional>

#include "lowk/error.hpp"

namespace lowk {

using L = FreeProductWord::Letter;

namespace {

int a_power(L l) { return l == L::A ? 1 : l == L::A2 ? 2 : 0; }

}  // namespace

FreeProductWord FreeProductWord::from_letters(const std::vector<Letter>& letters) {
  FreeProductWord w;
  auto& st = w.letters_;
  for (auto l : letters) {
    if (st.empty()) {
      st.push_back(l);
      continue;
    }
    L top = st.back();
    if (l == L::B && top == L::B) {
      st.pop_back();
    } else if (l != L::B && top != L::B) {
      int e = (a_power(top) + a_power(l)) % 3;
      st.pop_back();
      if (e) st.push_back(e == 1 ? L::A : L::A2);
    } else {
      st.push_back(l);
    }
  }
  return w;
}

FreeProductWord FreeProductWord::parse(const std::string& s) {
  std::vector<Letter> out;
  if (s == "1") return {};
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == 'b') {
      out.push_back(L::B);
    } else if (s[i] == 'a') {
      if (s.compare(i + 1, 2, "^2") == 0) {
        out.push_back(L::A2);
        i += 2;
      } else {
        out.push_back(L::A);
      }
    } else {
      fail(ErrorCode::InvalidArgument, "bad letter in free product word: " + s);
    }
  }
  return from_letters(out);
}

FreeProductWord FreeProductWord::operator*(const FreeProductWord& o) const {
  std::vector<Letter> all = letters_;
  all.insert(all.end(), o.letters_.begin(), o.letters_.end());
  return from_letters(all);
}

FreeProductWord FreeProductWord::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out)
    if (l != L::B) l = l == L::A ? L::A2 : L::A;
  return from_letters(out);
}

FreeProductWord FreeProductWord::pow(std::int64_t k) const {
  FreeProductWord base = k < 0 ? inverse() : *this;
  FreeProductWord out;
  for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) out = out * base;
  return out;
}

std::string FreeProductWord::to_string() const {
  if (letters_.empty()) return "1";
  std::string s;
  for (auto l : letters_) s += l == L::A ? "a" : l == L::A2 ? "a^2" : "b";
  return s;
}

Elem FreeProductQuotient::evaluate(const FreeProductWord& w) const {
  Elem out = group.identity();
  for (auto l : w.letters()) {
    Elem g = l == L::B ? image_b : l == L::A ? image_a : group.mul(image_a, image_a);
    out = group.mul(out, g);
  }
  return out;
}

SchreierCertificate reidemeister_schreier(const FreeProductQuotient& q,
                                          const std::vector<FreeProductWord>& transversal) {
  const FiniteGroup& g = q.group;
  if (g.order_of(q.image_a) != 3) fail(ErrorCode::InvalidArgument, "quotient is not injective on <a>");
  if (g.order_of(q.image_b) != 2) fail(ErrorCode::InvalidArgument, "quotient is not injective on <b>");
  const std::size_t n = g.order();
  if (transversal.size() != n)
    fail(ErrorCode::InvalidArgument, "transversal size differs from the index " + std::to_string(n));
  if (!transversal.empty() && !transversal[0].is_identity())
    fail(ErrorCode::InvalidArgument, "transversal must start with the identity");

  // Coset of w is q(w); the quotient is a group so cosets are its elements.
  std::vector<std::size_t> rep_of(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    Elem e = q.evaluate(transversal[k]);
    if (rep_of[e] != n) fail(ErrorCode::InvalidArgument, "two transversal words lie in the same coset");
    rep_of[e] = k;
  }
  // Every coset is hit, so the quotient is onto.

  const FreeProductWord a = FreeProductWord::parse("a"), b = FreeProductWord::parse("b");
  for (const auto& t : transversal) {
    FreeProductWord prefix;
    std::vector<FreeProductWord> steps;
    for (auto l : t.letters()) {
      if (l == L::A2) steps.push_back(a);
      steps.push_back(l == L::B ? b : a);
    }
    for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
      prefix = prefix * steps[i];
      if (std::find(transversal.begin(), transversal.end(), prefix) == transversal.end())
        fail(ErrorCode::InvalidArgument, "transversal is not prefix-closed at " + t.to_string());
    }
  }

  SchreierCertificate cert;
  cert.index = n;
  cert.transversal = transversal;
  cert.euler_rank = 1 + n / 6;
  if (n % 6 != 0) fail(ErrorCode::Internal, "torsion-free kernel with index not divisible by 6");

  // slot[letter][coset] -> position in nontrivial, or npos.
  const std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<std::size_t> slot[2] = {std::vector<std::size_t>(n, npos), std::vector<std::size_t>(n, npos)};
  auto coset_after = [&](std::size_t k, const FreeProductWord& gen) {
    return rep_of[q.evaluate(transversal[k] * gen)];
  };
  for (int which = 0; which < 2; ++which) {
    const FreeProductWord& gen = which == 0 ? a : b;
    for (std::size_t k = 0; k < n; ++k) {
      FreeProductWord s = transversal[k] * gen * transversal[coset_after(k, gen)].inverse();
      if (s.is_identity()) continue;
      slot[which][k] = cert.nontrivial.size();
      cert.nontrivial.push_back({k, which == 0 ? 'a' : 'b', s});
    }
  }

  std::size_t eliminated = 0;
  for (int which = 0; which < 2; ++which) {
    const FreeProductWord& gen = which == 0 ? a : b;
    std::vector<bool> seen(n, false);
    for (std::size_t k = 0; k < n; ++k) {
      if (seen[k]) continue;
      std::vector<std::size_t> members;
      std::size_t c = k, len = 0;
      do {
        seen[c] = true;
        if (slot[which][c] != npos) members.push_back(slot[which][c]);
        c = coset_after(c, gen);
        ++len;
      } while (c != k);
      if (len != (which == 0 ? 3u : 2u)) fail(ErrorCode::Internal, "relator orbit of unexpected length");
      if (!members.empty()) ++eliminated;
      cert.orbits.push_back(members);
    }
  }
  cert.rank = cert.nontrivial.size() - eliminated;
  return cert;
}

bool is_schreier_basis(const SchreierCertificate& cert, const std::vector<FreeProductWord>& claimed) {
  const std::size_t m = cert.nontrivial.size();
  std::vector<std::vector<std::size_t>> options(claimed.size());
  for (std::size_t c = 0; c < claimed.size(); ++c)
    for (std::size_t k = 0; k < m; ++k) {
      const auto& v = cert.nontrivial[k].value;
      if (v == claimed[c] || v == claimed[c].inverse()) options[c].push_back(k);
    }

  std::vector<bool> used(m, false);
  auto orbits_ok = [&] {
    for (const auto& orbit : cert.orbits) {
      if (orbit.empty()) continue;
      std::size_t claimed_here = 0;
      for (auto k : orbit) claimed_here += used[k] ? 1 : 0;
      if (orbit.size() - claimed_here != 1) return false;
    }
    return true;
  };
  std::function<bool(std::size_t)> assign = [&](std::size_t c) {
    if (c == claimed.size()) return orbits_ok();
    for (auto k : options[c]) {
      if (used[k]) continue;
      used[k] = true;
      if (assign(c + 1)) return true;
      used[k] = false;
    }
    return false;
  };
  return assign(0);
}

}  // namespace lowk
