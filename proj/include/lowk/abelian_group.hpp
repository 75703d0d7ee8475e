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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace lowk {

/// Multiplicity of a named infinite summand: a finite count or countably many.
struct Copies {
  bool countable = false;
  std::uint64_t count = 1;

  static Copies finite(std::uint64_t k) { return {false, k}; }
  static Copies infinitely_many() { return {true, 0}; }

  Copies operator+(const Copies& o) const;
  Copies scaled(std::uint64_t k) const;
  auto operator<=>(const Copies&) const = default;
};

/// Well-known summand names.
namespace summand {
inline constexpr const char* kZ2Countable = "Z2_countable";       // (Z_2)^oo
inline constexpr const char* kW = "W_exponent_2_or_4";            // exponent 2 or 4
std::string nil_bass(int i);                                      // NilBass_i
std::string nil_twisted(int i, int order);                        // NilTwisted_i_order
std::string nil(int i);                                           // Nil_i
}  // namespace summand

struct InfiniteSummand {
  std::string name;
  Copies copies;
  auto operator<=>(const InfiniteSummand&) const = default;
};

/// Z^rank + (+) Z_t over torsion + named infinite summands, kept canonical:
/// torsion ascending, summands by name, equal names merged.
class AbelianGroupExpr {
 public:
  AbelianGroupExpr() = default;

  static AbelianGroupExpr zero() { return {}; }
  static AbelianGroupExpr free(std::uint64_t rank);
  static AbelianGroupExpr cyclic(std::uint64_t order);  // order 1 gives zero
  static AbelianGroupExpr elementary(std::uint64_t order, std::uint64_t copies);
  static AbelianGroupExpr named(const std::string& name, Copies copies = Copies::finite(1));

  std::uint64_t rank() const { return rank_; }
  const std::vector<std::uint64_t>& torsion() const { return torsion_; }
  const std::vector<InfiniteSummand>& infinite() const { return infinite_; }
  bool is_zero() const { return rank_ == 0 && torsion_.empty() && infinite_.empty(); }

  /// Direct sum.
  AbelianGroupExpr operator+(const AbelianGroupExpr& o) const;
  /// k-fold direct sum of this group.
  AbelianGroupExpr scaled(std::uint64_t k) const;
  /// Countable direct sum of copies of this group: every summand becomes
  /// countably infinite. Free rank turns into a named countable summand.
  AbelianGroupExpr countable_sum() const;

  bool operator==(const AbelianGroupExpr&) const = default;

  /// Human form, e.g. "Z^2 ⊕ Z_2 ⊕ 2(Z_2)^∞ ⊕ 2W". The zero group prints as "0".
  /// Countable sums of cyclic groups print before other named summands.
  std::string to_string() const;

  /// {"rank", "torsion", "infinite": [{"name", "copies"}]}.
  nlohmann::ordered_json to_json() const;
  static AbelianGroupExpr from_json(const nlohmann::ordered_json& j);

 private:
  void canonicalize();

  std::uint64_t rank_ = 0;
  std::vector<std::uint64_t> torsion_;
  std::vector<InfiniteSummand> infinite_;
};

}  // namespace lowk
