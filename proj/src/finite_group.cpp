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

#include "lowk/finite_group.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <utility>

#include "lowk/error.hpp"
#include "lowk/galois_images.hpp"

namespace lowk {

FiniteGroup::FiniteGroup(std::shared_ptr<const detail::GroupImpl> impl) : impl_(std::move(impl)) {
  if (!impl_) fail(ErrorCode::Internal, "FiniteGroup: null model");
}

Elem FiniteGroup::pow(Elem a, std::int64_t k) const {
  auto n = static_cast<std::int64_t>(order_of(a));
  k %= n;
  if (k < 0) k += n;
  Elem result = identity(), base = a;
  while (k) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

Elem FiniteGroup::word(const std::vector<int>& letters) const {
  auto gens = generators();
  Elem g = identity();
  for (int l : letters) {
    auto idx = static_cast<std::size_t>(l > 0 ? l : -l);
    if (l == 0 || idx > gens.size())
      fail(ErrorCode::InvalidArgument, "word: letter " + std::to_string(l) + " out of range");
    Elem s = gens[idx - 1];
    g = mul(g, l > 0 ? s : inv(s));
  }
  return g;
}

std::string family_name(const FamilyTag& t) {
  auto is_pow2 = [](std::uint64_t v) { return v && !(v & (v - 1)); };
  switch (t.kind) {
    case FamilyTag::Kind::Cyclic: return "Z_" + std::to_string(t.param);
    case FamilyTag::Kind::Dicyclic:
      if (is_pow2(t.param)) return "Q" + std::to_string(4 * t.param);
      return "Dic_" + std::to_string(4 * t.param);
    case FamilyTag::Kind::GeneralizedQuaternion: return "Q" + std::to_string(1ULL << t.param);
    case FamilyTag::Kind::BinaryTetrahedral: return "T*";
    case FamilyTag::Kind::BinaryOctahedral: return "O*";
    case FamilyTag::Kind::BinaryIcosahedral: return "I*";
    case FamilyTag::Kind::Custom: return "G";
  }
  return "?";
}

std::string FiniteGroup::name() const {
  FamilyTag t = family();
  if (t.kind == FamilyTag::Kind::Custom) return "G_" + std::to_string(order());
  return family_name(t);
}

namespace {

// ---- cyclic -------------------------------------------------------------------

class CyclicImpl final : public detail::GroupImpl {
 public:
  explicit CyclicImpl(std::uint64_t m) : m_(m) {}
  std::uint64_t order() const override { return m_; }
  Elem identity() const override { return 0; }
  Elem mul(Elem a, Elem b) const override { return static_cast<Elem>((a + b) % m_); }
  Elem inv(Elem a) const override { return static_cast<Elem>((m_ - a) % m_); }
  std::uint64_t order_of(Elem a) const override { return m_ / std::gcd<std::uint64_t>(a, m_); }
  std::uint64_t exponent() const override { return m_; }
  std::vector<Elem> generators() const override {
    return m_ == 1 ? std::vector<Elem>{} : std::vector<Elem>{1};
  }
  std::string element_name(Elem a) const override {
    if (a == 0) return "1";
    return a == 1 ? "g" : "g^" + std::to_string(a);
  }
  FamilyTag family() const override { return {FamilyTag::Kind::Cyclic, m_}; }

 private:
  std::uint64_t m_;
};

// ---- dicyclic -----------------------------------------------------------------

class DicyclicImpl final : public detail::GroupImpl {
 public:
  explicit DicyclicImpl(std::uint64_t m) : m_(m), n2_(2 * m) {}
  std::uint64_t order() const override { return 4 * m_; }
  Elem identity() const override { return 0; }

  Elem mul(Elem p, Elem q) const override {
    auto [a1, b1] = split(p);
    auto [a2, b2] = split(q);
    if (b1 == 0) return join(a1 + a2, b2);
    // x^a1 y x^a2 = x^(a1-a2) y, and y y = x^m.
    std::uint64_t a = a1 + n2_ - a2;
    if (b2 == 1) return join(a + m_, 0);
    return join(a, 1);
  }

  Elem inv(Elem p) const override {
    auto [a, b] = split(p);
    if (b == 0) return join(n2_ - a, 0);
    return join(a + m_, 1);  // (x^a y)^-1 = x^(a+m) y
  }

  std::uint64_t order_of(Elem p) const override {
    auto [a, b] = split(p);
    if (b == 1) return 4;
    return n2_ / std::gcd<std::uint64_t>(a, n2_);
  }

  std::uint64_t exponent() const override { return std::lcm<std::uint64_t>(n2_, 4); }
  std::vector<Elem> generators() const override { return {join(1, 0), join(0, 1)}; }

  std::string element_name(Elem p) const override {
    auto [a, b] = split(p);
    std::string s;
    if (a == 1) s = "x";
    else if (a > 1) s = "x^" + std::to_string(a);
    if (b) s += s.empty() ? "y" : " y";
    return s.empty() ? "1" : s;
  }

  FamilyTag family() const override { return {FamilyTag::Kind::Dicyclic, m_}; }

 private:
  std::pair<std::uint64_t, unsigned> split(Elem p) const {
    return {p % n2_, static_cast<unsigned>(p / n2_)};
  }
  Elem join(std::uint64_t a, unsigned b) const { return static_cast<Elem>(a % n2_ + n2_ * b); }

  std::uint64_t m_, n2_;
};

// ---- explicit element lists (matrix groups, Cayley tables) --------------------

// Shared storage for groups given by a finite element list plus a product rule.
// Orders are filled by walking each cyclic subgroup once.
class ListedImpl : public detail::GroupImpl {
 public:
  std::uint64_t order() const override { return inv_.size(); }
  Elem identity() const override { return identity_; }
  Elem inv(Elem a) const override { return inv_[a]; }
  std::uint64_t order_of(Elem a) const override { return orders_[a]; }
  std::uint64_t exponent() const override { return exponent_; }
  std::vector<Elem> generators() const override { return gens_; }
  FamilyTag family() const override { return tag_; }

 protected:
  void finish_tables() {
    const std::size_t n = inv_.size();
    orders_.assign(n, 0);
    for (Elem g = 0; g < n; ++g) {
      if (orders_[g]) continue;
      std::vector<Elem> powers{g};
      while (powers.back() != identity_) powers.push_back(mul(powers.back(), g));
      const std::uint64_t ord = powers.size();
      for (std::uint64_t k = 1; k <= ord; ++k) {
        Elem h = powers[k - 1];
        if (orders_[h]) continue;
        orders_[h] = ord / std::gcd(k, ord);
        inv_[h] = powers[(2 * ord - k - 1) % ord];  // g^(ord-k)
      }
    }
    exponent_ = 1;
    for (auto o : orders_) exponent_ = std::lcm(exponent_, o);
  }

  Elem identity_ = 0;
  std::vector<Elem> inv_;
  std::vector<std::uint64_t> orders_;
  std::uint64_t exponent_ = 1;
  std::vector<Elem> gens_;
  FamilyTag tag_;
};

using Mat = std::array<std::uint32_t, 4>;  // row-major 2x2

struct FieldArith {
  std::function<std::uint32_t(std::uint32_t, std::uint32_t)> add, mul;
  std::function<std::string(std::uint32_t)> show;
  std::uint32_t size;
};

FieldArith prime_field(std::uint32_t p) {
  return {[p](std::uint32_t a, std::uint32_t b) { return (a + b) % p; },
          [p](std::uint32_t a, std::uint32_t b) {
            return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
          },
          [](std::uint32_t a) { return std::to_string(a); }, p};
}

// F_9 = F_3[i] with i^2 = -1; a + b i is encoded as a + 3b.
FieldArith field_nine() {
  auto add = [](std::uint32_t x, std::uint32_t y) {
    return (x % 3 + y % 3) % 3 + 3 * ((x / 3 + y / 3) % 3);
  };
  auto mul = [](std::uint32_t x, std::uint32_t y) {
    std::uint32_t a = x % 3, b = x / 3, c = y % 3, d = y / 3;
    return (a * c + 2 * b * d) % 3 + 3 * ((a * d + b * c) % 3);
  };
  auto show = [](std::uint32_t x) {
    std::uint32_t a = x % 3, b = x / 3;
    if (b == 0) return std::to_string(a);
    std::string im = b == 1 ? "i" : "2i";
    return a == 0 ? im : std::to_string(a) + "+" + im;
  };
  return {add, mul, show, 9};
}

class MatrixGroupImpl final : public ListedImpl {
 public:
  MatrixGroupImpl(FieldArith f, const std::vector<Mat>& gens, FamilyTag tag, std::size_t limit)
      : f_(std::move(f)) {
    tag_ = tag;
    const Mat one{1, 0, 0, 1};
    std::vector<Mat> found{one}, frontier{one};
    std::vector<Mat> seen{one};
    while (!frontier.empty()) {
      std::vector<Mat> next;
      for (const auto& a : frontier)
        for (const auto& g : gens) {
          Mat c = product(a, g);
          auto it = std::lower_bound(seen.begin(), seen.end(), c);
          if (it != seen.end() && *it == c) continue;
          seen.insert(it, c);
          next.push_back(c);
          if (seen.size() > limit) fail(ErrorCode::Internal, "matrix closure exceeded its bound");
        }
      frontier.swap(next);
    }
    elems_ = std::move(seen);
    identity_ = lookup(one);
    for (const auto& g : gens) gens_.push_back(lookup(g));
    inv_.assign(elems_.size(), 0);
    finish_tables();
  }

  Elem mul(Elem a, Elem b) const override { return lookup(product(elems_[a], elems_[b])); }

  std::string element_name(Elem a) const override {
    const Mat& m = elems_[a];
    return "[[" + f_.show(m[0]) + "," + f_.show(m[1]) + "],[" + f_.show(m[2]) + "," +
           f_.show(m[3]) + "]]";
  }

 private:
  Mat product(const Mat& a, const Mat& b) const {
    return {f_.add(f_.mul(a[0], b[0]), f_.mul(a[1], b[2])),
            f_.add(f_.mul(a[0], b[1]), f_.mul(a[1], b[3])),
            f_.add(f_.mul(a[2], b[0]), f_.mul(a[3], b[2])),
            f_.add(f_.mul(a[2], b[1]), f_.mul(a[3], b[3]))};
  }

  Elem lookup(const Mat& m) const {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), m);
    if (it == elems_.end() || *it != m) fail(ErrorCode::Internal, "matrix product left the group");
    return static_cast<Elem>(it - elems_.begin());
  }

  FieldArith f_;
  std::vector<Mat> elems_;
};

class TableImpl final : public ListedImpl {
 public:
  TableImpl(std::vector<std::vector<Elem>> table, std::vector<std::string> names)
      : table_(std::move(table)), names_(std::move(names)) {
    tag_ = {FamilyTag::Kind::Custom, 0};
    const std::size_t n = table_.size();
    if (n == 0) fail(ErrorCode::InvalidArgument, "Cayley table is empty");
    for (const auto& row : table_) {
      if (row.size() != n) fail(ErrorCode::InvalidArgument, "Cayley table is not square");
      for (auto v : row)
        if (v >= n) fail(ErrorCode::InvalidArgument, "Cayley table entry out of range");
    }
    bool found = false;
    for (Elem e = 0; e < n && !found; ++e) {
      bool ok = true;
      for (Elem a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
      if (ok) {
        identity_ = e;
        found = true;
      }
    }
    if (!found) fail(ErrorCode::InvalidArgument, "Cayley table has no identity");
    for (Elem a = 0; a < n; ++a) {
      bool has_inverse = false;
      for (Elem b = 0; b < n; ++b) has_inverse |= table_[a][b] == identity_;
      if (!has_inverse) fail(ErrorCode::InvalidArgument, "Cayley table element lacks an inverse");
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c)
          if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
            fail(ErrorCode::InvalidArgument, "Cayley table is not associative");
    }
    for (Elem a = 0; a < n; ++a)
      if (a != identity_) gens_.push_back(a);
    inv_.assign(n, 0);
    finish_tables();
    if (names_.size() != n) {
      names_.clear();
      for (Elem a = 0; a < n; ++a) names_.push_back("e" + std::to_string(a));
    }
  }

  Elem mul(Elem a, Elem b) const override { return table_[a][b]; }
  std::string element_name(Elem a) const override { return names_[a]; }

 private:
  std::vector<std::vector<Elem>> table_;
  std::vector<std::string> names_;
};

constexpr std::uint32_t kQuaternionPrime = 12289;  // 12289 - 1 = 3 * 2^12

std::uint32_t primitive_root(std::uint32_t p) {
  auto factors = prime_factors(p - 1);
  for (std::uint32_t w = 2; w < p; ++w) {
    bool ok = true;
    for (auto q : factors) ok = ok && powmod(w, (p - 1) / q, p) != 1;
    if (ok) return w;
  }
  fail(ErrorCode::Internal, "no primitive root found");
}

void check_unique_involution(const FiniteGroup& g, const char* what) {
  std::uint64_t count = 0;
  for (Elem a = 0; a < g.order(); ++a) count += g.order_of(a) == 2;
  if (count != 1)
    fail(ErrorCode::Internal, std::string(what) + ": expected a unique element of order 2");
}

}  // namespace

FiniteGroup build_cyclic(std::uint64_t m) {
  if (m < 1) fail(ErrorCode::InvalidArgument, "cyclic group needs m >= 1");
  if (m > 0xFFFFFFFFULL) fail(ErrorCode::TooLarge, "cyclic group order exceeds the id range");
  return FiniteGroup(std::make_shared<CyclicImpl>(m));
}

FiniteGroup build_dicyclic(std::uint64_t m) {
  if (m < 2) fail(ErrorCode::InvalidArgument, "dicyclic group needs m >= 2, got " + std::to_string(m));
  if (m > 0x3FFFFFFFULL) fail(ErrorCode::TooLarge, "dicyclic group order exceeds the id range");
  return FiniteGroup(std::make_shared<DicyclicImpl>(m));
}

Elem dicyclic_element(std::uint64_t m, std::int64_t a, unsigned b) {
  auto n2 = static_cast<std::int64_t>(2 * m);
  std::int64_t r = ((a % n2) + n2) % n2;
  return static_cast<Elem>(r + n2 * (b & 1));
}

FiniteGroup build_generalized_quaternion(unsigned k) {
  if (k < 3 || k > 13)
    fail(ErrorCode::InvalidArgument, "generalized quaternion group needs 3 <= k <= 13");
  const std::uint32_t p = kQuaternionPrime;
  const std::uint32_t half = 1U << (k - 1);
  auto zeta = static_cast<std::uint32_t>(powmod(primitive_root(p), (p - 1) / half, p));
  auto zeta_inv = static_cast<std::uint32_t>(powmod(zeta, half - 1, p));
  Mat x{zeta, 0, 0, zeta_inv};
  Mat y{0, 1, p - 1, 0};
  auto impl = std::make_shared<MatrixGroupImpl>(
      prime_field(p), std::vector<Mat>{x, y},
      FamilyTag{FamilyTag::Kind::GeneralizedQuaternion, k}, std::size_t{1} << k);
  FiniteGroup g(impl);
  if (g.order() != (1ULL << k)) fail(ErrorCode::Internal, "generalized quaternion closure has wrong order");
  check_unique_involution(g, "generalized quaternion group");
  return g;
}

FiniteGroup build_binary_polyhedral(BinaryPolyhedral kind) {
  std::shared_ptr<MatrixGroupImpl> impl;
  std::uint64_t expected = 0;
  switch (kind) {
    case BinaryPolyhedral::T:
      impl = std::make_shared<MatrixGroupImpl>(prime_field(3), std::vector<Mat>{{0, 1, 2, 0}, {1, 1, 0, 1}},
                                               FamilyTag{FamilyTag::Kind::BinaryTetrahedral, 0}, 24);
      expected = 24;
      break;
    case BinaryPolyhedral::I:
      impl = std::make_shared<MatrixGroupImpl>(prime_field(5), std::vector<Mat>{{0, 1, 4, 0}, {1, 1, 0, 1}},
                                               FamilyTag{FamilyTag::Kind::BinaryIcosahedral, 0}, 120);
      expected = 120;
      break;
    case BinaryPolyhedral::O: {
      // SL(2,3) generators plus [[0,i],[i,i]], an element of order 8.
      const std::uint32_t i = 3;
      impl = std::make_shared<MatrixGroupImpl>(
          field_nine(), std::vector<Mat>{{0, 1, 2, 0}, {1, 1, 0, 1}, {0, i, i, i}},
          FamilyTag{FamilyTag::Kind::BinaryOctahedral, 0}, 48);
      expected = 48;
      break;
    }
  }
  FiniteGroup g(impl);
  if (g.order() != expected)
    fail(ErrorCode::Internal, "binary polyhedral closure has order " + std::to_string(g.order()));
  check_unique_involution(g, "binary polyhedral group");
  return g;
}

FiniteGroup build_from_cayley_table(const std::vector<std::vector<Elem>>& table,
                                    std::vector<std::string> names) {
  return FiniteGroup(std::make_shared<TableImpl>(table, std::move(names)));
}

std::vector<Elem> center(const FiniteGroup& g) {
  auto gens = g.generators();
  std::vector<Elem> out;
  for (Elem a = 0; a < g.order(); ++a) {
    bool central = true;
    for (auto s : gens) central = central && g.mul(a, s) == g.mul(s, a);
    if (central) out.push_back(a);
  }
  return out;
}

std::map<std::uint64_t, std::uint64_t> order_census(const FiniteGroup& g) {
  std::map<std::uint64_t, std::uint64_t> out;
  for (Elem a = 0; a < g.order(); ++a) ++out[g.order_of(a)];
  return out;
}

}  // namespace lowk
