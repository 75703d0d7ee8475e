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

#include "lowk/galois_images.hpp"

#include <algorithm>
#include <numeric>

#include "lowk/error.hpp"

namespace lowk {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> lo, hi;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    lo.push_back(d);
    if (d != n / d) hi.push_back(n / d);
  }
  lo.insert(lo.end(), hi.rbegin(), hi.rend());
  return lo;
}

std::uint64_t num_divisors(std::uint64_t n) { return divisors(n).size(); }

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 1) return 0;
  unsigned __int128 r = 1, b = base % mod;
  while (exp) {
    if (exp & 1) r = r * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(r);
}

std::pair<unsigned, std::uint64_t> p_part(std::uint64_t n, std::uint64_t p) {
  unsigned e = 0;
  std::uint64_t q = 1;
  while (n % p == 0) {
    n /= p;
    q *= p;
    ++e;
  }
  return {e, q};
}

bool UnitSubgroup::contains(std::uint64_t t) const {
  return std::binary_search(residues.begin(), residues.end(), t % modulus);
}

std::uint64_t mult_order(std::uint64_t a, std::uint64_t n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "mult_order: modulus must be >= 1");
  if (std::gcd(a, n) != 1)
    fail(ErrorCode::InvalidArgument,
         "mult_order: " + std::to_string(a) + " is not a unit mod " + std::to_string(n));
  if (n == 1) return 1;
  std::uint64_t k = 1, x = a % n;
  while (x != 1) {
    x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * a % n);
    ++k;
  }
  return k;
}

UnitSubgroup generated_subgroup(std::uint64_t n, const std::vector<std::uint64_t>& gens) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "generated_subgroup: modulus must be >= 1");
  for (auto g : gens)
    if (std::gcd(g, n) != 1)
      fail(ErrorCode::InvalidArgument,
           "generated_subgroup: " + std::to_string(g) + " is not a unit mod " + std::to_string(n));
  std::vector<char> seen(n, 0);
  std::vector<std::uint64_t> frontier{1 % n};
  seen[1 % n] = 1;
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (auto x : frontier)
      for (auto g : gens) {
        auto y = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * (g % n) % n);
        if (!seen[y]) {
          seen[y] = 1;
          next.push_back(y);
        }
      }
    frontier.swap(next);
  }
  UnitSubgroup s{n, {}};
  for (std::uint64_t t = 0; t < n; ++t)
    if (seen[t]) s.residues.push_back(t);
  return s;
}

UnitSubgroup full_unit_group(std::uint64_t n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "full_unit_group: modulus must be >= 1");
  UnitSubgroup s{n, {}};
  if (n == 1) {
    s.residues.push_back(0);
    return s;
  }
  for (std::uint64_t t = 1; t < n; ++t)
    if (std::gcd(t, n) == 1) s.residues.push_back(t);
  return s;
}

bool contains_minus_one(const UnitSubgroup& s) {
  return s.contains(s.modulus - 1);
}

std::vector<std::uint64_t> subgroup_generators(const UnitSubgroup& s) {
  std::vector<std::uint64_t> gens;
  UnitSubgroup reached = generated_subgroup(s.modulus, {});
  for (auto t : s.residues) {
    if (reached.size() == s.size()) break;
    if (reached.contains(t)) continue;
    gens.push_back(t);
    reached = generated_subgroup(s.modulus, gens);
  }
  return gens;
}

FieldDescriptor FieldDescriptor::padic(std::uint64_t p) {
  if (!is_prime(p)) fail(ErrorCode::InvalidArgument, "Q_p needs a prime p, got " + std::to_string(p));
  return {Kind::PAdic, p};
}

FieldDescriptor FieldDescriptor::finite_prime(std::uint64_t p) {
  if (!is_prime(p)) fail(ErrorCode::InvalidArgument, "F_p needs a prime p, got " + std::to_string(p));
  return {Kind::FinitePrime, p};
}

std::string FieldDescriptor::name() const {
  switch (kind) {
    case Kind::Rational: return "Q";
    case Kind::PAdic: return "Q_" + std::to_string(p);
    case Kind::FinitePrime: return "F_" + std::to_string(p);
  }
  return "?";
}

FieldDescriptor FieldDescriptor::parse(const std::string& text) {
  if (text == "Q") return rational();
  auto colon = text.find(':');
  if (colon == std::string::npos)
    fail(ErrorCode::InvalidArgument, "field must be Q, Qp:<p> or Fp:<p>, got '" + text + "'");
  std::string head = text.substr(0, colon), tail = text.substr(colon + 1);
  if (tail.empty() || !std::all_of(tail.begin(), tail.end(), ::isdigit))
    fail(ErrorCode::InvalidArgument, "field prime must be a positive integer, got '" + tail + "'");
  std::uint64_t p = std::stoull(tail);
  if (head == "Qp") return padic(p);
  if (head == "Fp") return finite_prime(p);
  fail(ErrorCode::InvalidArgument, "field must be Q, Qp:<p> or Fp:<p>, got '" + text + "'");
}

namespace {

// Image for moduli that are odd or divisible by 4.
UnitSubgroup image_direct(const FieldDescriptor& f, std::uint64_t n) {
  using K = FieldDescriptor::Kind;
  if (f.kind == K::Rational) return full_unit_group(n);
  if (n % f.p != 0) return generated_subgroup(n, {f.p % n});
  if (f.kind == K::FinitePrime)
    fail(ErrorCode::InvalidArgument,
         "F_" + std::to_string(f.p) + " image needs a p-regular modulus, got " + std::to_string(n));
  // Q_p with n = p^a * n1: t is allowed iff t mod n1 lies in <p mod n1>.
  auto [a, pa] = p_part(n, f.p);
  (void)a;
  std::uint64_t n1 = n / pa;
  UnitSubgroup on_n1 = generated_subgroup(n1, {f.p % n1});
  UnitSubgroup s{n, {}};
  for (auto t : full_unit_group(n).residues)
    if (on_n1.contains(t % n1)) s.residues.push_back(t);
  return s;
}

}  // namespace

UnitSubgroup phi_image(const FieldDescriptor& field, std::uint64_t n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "phi_image: modulus must be >= 1");
  if (field.kind == FieldDescriptor::Kind::FinitePrime && n % field.p == 0)
    fail(ErrorCode::InvalidArgument,
         "F_" + std::to_string(field.p) + " image needs p not dividing n = " + std::to_string(n));
  if (n % 4 != 2) return image_direct(field, n);

  // zeta_n and zeta_{n/2} generate the same field; (Z/n)^* -> (Z/(n/2))^* is
  // an isomorphism, so lift each residue to its odd representative.
  std::uint64_t half = n / 2;
  UnitSubgroup reduced = image_direct(field, half);
  UnitSubgroup s{n, {}};
  for (auto t : reduced.residues) {
    std::uint64_t lifted = (t % 2 == 1) ? t : t + half;
    s.residues.push_back(lifted % n);
  }
  std::sort(s.residues.begin(), s.residues.end());
  return s;
}

}  // namespace lowk
