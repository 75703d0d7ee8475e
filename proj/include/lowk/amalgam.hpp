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
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lowk/finite_group.hpp"

namespace lowk {

enum class Side : std::uint8_t { First = 0, Second = 1 };

inline Side other(Side s) { return s == Side::First ? Side::Second : Side::First; }

/// A nontrivial coset representative: index >= 1 into the side's transversal.
struct Letter {
  Side side = Side::First;
  std::uint32_t rep = 0;
  bool operator==(const Letter&) const = default;
};

/// core * t_1 * ... * t_n with the t_i alternating in side.
struct AmalgamElement {
  std::uint64_t spec_id = 0;
  Elem core = 0;
  std::vector<Letter> letters;

  std::size_t syllable_length() const { return letters.size(); }
  bool operator==(const AmalgamElement&) const = default;
};

/// An element of one factor, tagged with the factor it lives in.
struct FactorLetter {
  Side side = Side::First;
  Elem g = 0;
};

/// Unit quaternions with ids 1, -1, i, -i, j, -j, k, -k = 0..7, named
/// accordingly.
FiniteGroup build_quaternion_units();

namespace quat {
inline constexpr Elem kOne = 0, kMinusOne = 1, kI = 2, kMinusI = 3, kJ = 4, kMinusJ = 5, kK = 6, kMinusK = 7;
}  // namespace quat

/// Extends gen_images[k] = image of src_gens[k] to all of src by breadth-first
/// search over words in src_gens, then checks the result is a homomorphism.
/// InvalidArgument when the generators do not generate or the images do not
/// define a homomorphism.
std::vector<Elem> extend_homomorphism(const FiniteGroup& src, const std::vector<Elem>& src_gens,
                                      const FiniteGroup& dst, const std::vector<Elem>& gen_images);

struct AmalgamFactor {
  FiniteGroup group;
  std::vector<Elem> embedding;    // F element -> group element
  std::vector<Elem> transversal;  // right coset reps of F, transversal[0] = identity
  std::vector<std::string> labels;  // one per transversal entry; labels[0] unused
};

/// G1 *_F G2. Validation is exhaustive: both embeddings are injective
/// homomorphisms, and each transversal meets every right coset F g exactly
/// once. Construct once and share; elements remember which spec made them.
class AmalgamSpec {
 public:
  AmalgamSpec(FiniteGroup core, AmalgamFactor first, AmalgamFactor second);

  const FiniteGroup& core() const { return core_; }
  const AmalgamFactor& factor(Side s) const { return f_[idx(s)]; }
  bool core_is_normal() const { return normal_; }

  AmalgamElement identity() const;
  AmalgamElement from_core(Elem f) const;
  AmalgamElement from_factor(Side s, Elem g) const;

  /// Normal form of the product of the letters, left to right.
  AmalgamElement reduce(const std::vector<FactorLetter>& word) const;
  AmalgamElement multiply(const AmalgamElement& a, const AmalgamElement& b) const;
  AmalgamElement invert(const AmalgamElement& a) const;
  AmalgamElement pow(const AmalgamElement& a, std::int64_t k) const;
  /// g a g^-1.
  AmalgamElement conjugate(const AmalgamElement& g, const AmalgamElement& a) const;

  /// Letters of a written back as factor elements: the core first (on the
  /// First side), then each transversal representative.
  std::vector<FactorLetter> to_word(const AmalgamElement& a) const;

  /// True iff some cyclic conjugate of a has syllable length <= 1.
  bool has_finite_order(const AmalgamElement& a) const;

  /// The set a s a^-1 for s in S, sorted, or nullopt if some image leaves the
  /// core. Requires the core to be normal in both factors.
  std::optional<std::vector<Elem>> conjugate_subgroup(const AmalgamElement& a,
                                                      const std::vector<Elem>& subset) const;

  /// Core element of a, or nullopt if a has letters.
  std::optional<Elem> as_core(const AmalgamElement& a) const;

  /// e.g. "-1 u r^2 u", or the bare core name when there are no letters.
  std::string to_string(const AmalgamElement& a) const;

 private:
  static std::size_t idx(Side s) { return static_cast<std::size_t>(s); }
  void check_same(const AmalgamElement& a) const;

  struct Tables {
    std::vector<std::uint32_t> coset;  // group element -> transversal index
    std::vector<Elem> core_part;       // g = embed(core_part[g]) * transversal[coset[g]]
    std::vector<std::int64_t> in_core;  // group element -> F element, or -1
  };

  FiniteGroup core_;
  AmalgamFactor f_[2];
  Tables t_[2];
  bool normal_ = false;
  std::uint64_t id_ = 0;
};

/// Subgroup of the core generated by the given elements, sorted.
std::vector<Elem> generated_core_subgroup(const FiniteGroup& f, const std::vector<Elem>& gens);

}  // namespace lowk
