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
#include "lowk/amalgam.hpp"

#include <algorithm>
#include <atomic>
#include <deque>

#include "lowk/error.hpp"

namespace lowk {

FiniteGroup build_quaternion_units() {
  // Basis 1, i, j, k as 0..3; basis products as (sign, basis).
  static const int kSign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  static const int kBasis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  std::vector<std::vector<Elem>> table(8, std::vector<Elem>(8));
  for (Elem a = 0; a < 8; ++a)
    for (Elem b = 0; b < 8; ++b) {
      int sa = a % 2 ? -1 : 1, sb = b % 2 ? -1 : 1;
      int s = sa * sb * kSign[a / 2][b / 2];
      table[a][b] = static_cast<Elem>(2 * kBasis[a / 2][b / 2] + (s < 0 ? 1 : 0));
    }
  return build_from_cayley_table(table, {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

std::vector<Elem> extend_homomorphism(const FiniteGroup& src, const std::vector<Elem>& src_gens,
                                      const FiniteGroup& dst, const std::vector<Elem>& gen_images) {
  if (src_gens.size() != gen_images.size())
    fail(ErrorCode::InvalidArgument, "extend_homomorphism: generator and image lists differ in length");
  const Elem unset = static_cast<Elem>(-1);
  std::vector<Elem> image(src.order(), unset);
  image[src.identity()] = dst.identity();
  std::deque<Elem> queue{src.identity()};
  while (!queue.empty()) {
    Elem a = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < src_gens.size(); ++k) {
      Elem b = src.mul(a, src_gens[k]);
      if (image[b] != unset) continue;
      image[b] = dst.mul(image[a], gen_images[k]);
      queue.push_back(b);
    }
  }
  for (Elem a = 0; a < src.order(); ++a)
    if (image[a] == unset) fail(ErrorCode::InvalidArgument, "extend_homomorphism: generators do not generate");
  for (Elem a = 0; a < src.order(); ++a)
    for (Elem b = 0; b < src.order(); ++b)
      if (image[src.mul(a, b)] != dst.mul(image[a], image[b]))
        fail(ErrorCode::InvalidArgument, "extend_homomorphism: images do not define a homomorphism");
  return image;
}

std::vector<Elem> generated_core_subgroup(const FiniteGroup& f, const std::vector<Elem>& gens) {
  std::vector<bool> seen(f.order(), false);
  std::vector<Elem> out{f.identity()};
  seen[f.identity()] = true;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (auto g : gens) {
      Elem h = f.mul(out[i], g);
      if (!seen[h]) {
        seen[h] = true;
        out.push_back(h);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::atomic<std::uint64_t> next_spec_id{1};

const char* side_name(Side s) { return s == Side::First ? "first" : "second"; }

}  // namespace

AmalgamSpec::AmalgamSpec(FiniteGroup core, AmalgamFactor first, AmalgamFactor second)
    : core_(std::move(core)), f_{std::move(first), std::move(second)} {
  const std::uint64_t nf = core_.order();
  normal_ = true;
  for (Side s : {Side::First, Side::Second}) {
    const AmalgamFactor& fac = f_[idx(s)];
    const FiniteGroup& g = fac.group;
    const std::string where = std::string(" (") + side_name(s) + " factor)";
    if (fac.embedding.size() != nf) fail(ErrorCode::InvalidArgument, "embedding has the wrong size" + where);
    if (g.order() % nf != 0) fail(ErrorCode::InvalidArgument, "core order does not divide factor order" + where);

    Tables& t = t_[idx(s)];
    t.in_core.assign(g.order(), -1);
    for (Elem a = 0; a < nf; ++a) {
      Elem e = fac.embedding[a];
      if (e >= g.order()) fail(ErrorCode::InvalidArgument, "embedding image out of range" + where);
      if (t.in_core[e] != -1) fail(ErrorCode::InvalidArgument, "embedding is not injective" + where);
      t.in_core[e] = a;
    }
    for (Elem a = 0; a < nf; ++a)
      for (Elem b = 0; b < nf; ++b)
        if (fac.embedding[core_.mul(a, b)] != g.mul(fac.embedding[a], fac.embedding[b]))
          fail(ErrorCode::InvalidArgument, "embedding is not a homomorphism" + where);

    const std::uint64_t index = g.order() / nf;
    if (fac.transversal.size() != index)
      fail(ErrorCode::InvalidArgument, "transversal needs exactly " + std::to_string(index) + " members" + where);
    if (fac.transversal[0] != g.identity())
      fail(ErrorCode::InvalidArgument, "transversal must start with the identity" + where);
    if (index < 2) fail(ErrorCode::InvalidArgument, "core must be a proper subgroup" + where);
    const std::uint32_t unset = static_cast<std::uint32_t>(-1);
    t.coset.assign(g.order(), unset);
    t.core_part.assign(g.order(), 0);
    for (std::uint32_t k = 0; k < index; ++k) {
      if (fac.transversal[k] >= g.order()) fail(ErrorCode::InvalidArgument, "transversal entry out of range" + where);
      for (Elem a = 0; a < nf; ++a) {
        Elem e = g.mul(fac.embedding[a], fac.transversal[k]);
        if (t.coset[e] != unset)
          fail(ErrorCode::InvalidArgument, "two transversal members share a coset" + where);
        t.coset[e] = k;
        t.core_part[e] = a;
      }
    }
    if (f_[idx(s)].labels.size() != index) {
      auto& labels = f_[idx(s)].labels;
      labels.assign(index, "");
      for (std::uint32_t k = 1; k < index; ++k) labels[k] = std::string(s == Side::First ? "s" : "t") + std::to_string(k);
    }

    for (auto gen : g.generators())
      for (Elem a = 0; a < nf && normal_; ++a)
        normal_ = t.in_core[g.conj(gen, fac.embedding[a])] != -1;
  }
  id_ = next_spec_id.fetch_add(1);
}

void AmalgamSpec::check_same(const AmalgamElement& a) const {
  if (a.spec_id != id_) fail(ErrorCode::InvalidArgument, "element belongs to a different amalgam");
}

AmalgamElement AmalgamSpec::identity() const { return {id_, core_.identity(), {}}; }

AmalgamElement AmalgamSpec::from_core(Elem f) const {
  if (f >= core_.order()) fail(ErrorCode::InvalidArgument, "core element out of range");
  return {id_, f, {}};
}

AmalgamElement AmalgamSpec::from_factor(Side s, Elem g) const { return reduce({{s, g}}); }

AmalgamElement AmalgamSpec::reduce(const std::vector<FactorLetter>& word) const {
  struct Syllable {
    Side side;
    Elem g;
  };
  Elem prefix = core_.identity();
  std::vector<Syllable> stack;

  auto absorb = [&](Elem f) {
    if (stack.empty()) {
      prefix = core_.mul(prefix, f);
    } else {
      Syllable& top = stack.back();
      const AmalgamFactor& fac = f_[idx(top.side)];
      top.g = fac.group.mul(top.g, fac.embedding[f]);
    }
  };

  for (const auto& [side, g] : word) {
    const AmalgamFactor& fac = f_[idx(side)];
    const Tables& t = t_[idx(side)];
    if (g >= fac.group.order())
      fail(ErrorCode::InvalidArgument, std::string("letter outside the ") + side_name(side) + " factor");
    if (t.in_core[g] != -1) {
      absorb(static_cast<Elem>(t.in_core[g]));
      continue;
    }
    if (stack.empty() || stack.back().side != side) {
      stack.push_back({side, g});
      continue;
    }
    Elem merged = fac.group.mul(stack.back().g, g);
    if (t.in_core[merged] == -1) {
      stack.back().g = merged;
    } else {
      stack.pop_back();
      absorb(static_cast<Elem>(t.in_core[merged]));
    }
  }

  // Split each syllable as s * carry = c * t from the right.
  AmalgamElement out{id_, 0, std::vector<Letter>(stack.size())};
  Elem carry = core_.identity();
  for (std::size_t i = stack.size(); i-- > 0;) {
    const AmalgamFactor& fac = f_[idx(stack[i].side)];
    const Tables& t = t_[idx(stack[i].side)];
    Elem h = fac.group.mul(stack[i].g, fac.embedding[carry]);
    out.letters[i] = {stack[i].side, t.coset[h]};
    carry = t.core_part[h];
  }
  out.core = core_.mul(prefix, carry);
  return out;
}

std::vector<FactorLetter> AmalgamSpec::to_word(const AmalgamElement& a) const {
  check_same(a);
  std::vector<FactorLetter> w;
  w.reserve(a.letters.size() + 1);
  w.push_back({Side::First, f_[0].embedding[a.core]});
  for (const auto& l : a.letters) w.push_back({l.side, f_[idx(l.side)].transversal[l.rep]});
  return w;
}

AmalgamElement AmalgamSpec::multiply(const AmalgamElement& a, const AmalgamElement& b) const {
  auto w = to_word(a);
  auto wb = to_word(b);
  w.insert(w.end(), wb.begin(), wb.end());
  return reduce(w);
}

AmalgamElement AmalgamSpec::invert(const AmalgamElement& a) const {
  auto w = to_word(a);
  std::reverse(w.begin(), w.end());
  for (auto& l : w) l.g = f_[idx(l.side)].group.inv(l.g);
  return reduce(w);
}

AmalgamElement AmalgamSpec::pow(const AmalgamElement& a, std::int64_t k) const {
  AmalgamElement base = k < 0 ? invert(a) : a;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
  AmalgamElement out = identity();
  while (e) {
    if (e & 1) out = multiply(out, base);
    base = multiply(base, base);
    e >>= 1;
  }
  return out;
}

AmalgamElement AmalgamSpec::conjugate(const AmalgamElement& g, const AmalgamElement& a) const {
  return multiply(multiply(g, a), invert(g));
}

bool AmalgamSpec::has_finite_order(const AmalgamElement& a) const {
  check_same(a);
  AmalgamElement cur = a;
  // Odd length >= 3: first and last letters share a side, so conjugating by
  // core * t_1 merges them and strictly shortens the word.
  while (cur.letters.size() >= 3 && cur.letters.size() % 2 == 1) {
    AmalgamElement head = reduce({{Side::First, f_[0].embedding[cur.core]},
                                  {cur.letters[0].side, f_[idx(cur.letters[0].side)].transversal[cur.letters[0].rep]}});
    cur = multiply(multiply(invert(head), cur), head);
  }
  return cur.letters.size() <= 1;
}

std::optional<std::vector<Elem>> AmalgamSpec::conjugate_subgroup(const AmalgamElement& a,
                                                                 const std::vector<Elem>& subset) const {
  check_same(a);
  if (!normal_) fail(ErrorCode::InvalidArgument, "conjugate_subgroup needs the core normal in both factors");
  AmalgamElement ainv = invert(a);
  std::vector<Elem> out;
  for (auto s : subset) {
    AmalgamElement r = multiply(multiply(a, from_core(s)), ainv);
    if (!r.letters.empty()) return std::nullopt;
    out.push_back(r.core);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Elem> AmalgamSpec::as_core(const AmalgamElement& a) const {
  check_same(a);
  if (!a.letters.empty()) return std::nullopt;
  return a.core;
}

std::string AmalgamSpec::to_string(const AmalgamElement& a) const {
  check_same(a);
  std::string out = core_.element_name(a.core);
  for (const auto& l : a.letters) out += " " + f_[idx(l.side)].labels[l.rep];
  return out;
}

}  // namespace lowk
