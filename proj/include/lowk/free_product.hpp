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

#include "lowk/finite_group.hpp"

namespace lowk {

/// Reduced word in Z3 * Z2 = <a, b | a^3 = b^2 = 1>. Letters alternate between
/// a-powers and b, so each element has exactly one representative.
class FreeProductWord {
 public:
  enum class Letter : std::uint8_t { A = 1, A2 = 2, B = 3 };

  FreeProductWord() = default;
  /// Reduces an arbitrary letter sequence.
  static FreeProductWord from_letters(const std::vector<Letter>& letters);
  /// Parses "a", "a^2", "b" juxtaposed, e.g. "ba^2ba"; "1" or "" is the identity.
  static FreeProductWord parse(const std::string& s);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  FreeProductWord operator*(const FreeProductWord& o) const;
  FreeProductWord inverse() const;
  FreeProductWord pow(std::int64_t k) const;

  /// "1" for the identity, otherwise e.g. "a^2bab".
  std::string to_string() const;

  bool operator==(const FreeProductWord&) const = default;
  auto operator<=>(const FreeProductWord&) const = default;

 private:
  std::vector<Letter> letters_;
};

/// Homomorphism Z3 * Z2 -> G given by the images of a and b.
struct FreeProductQuotient {
  FiniteGroup group;
  Elem image_a;
  Elem image_b;

  Elem evaluate(const FreeProductWord& w) const;
};

struct SchreierGenerator {
  std::size_t coset;      // index of t in the transversal
  char letter;            // 'a' or 'b'
  FreeProductWord value;  // t g rep(tg)^-1, reduced
};

/// Reidemeister-Schreier data for the kernel of an onto quotient that is
/// injective on both free factors, so the kernel is free.
struct SchreierCertificate {
  std::size_t index = 0;
  std::vector<FreeProductWord> transversal;
  std::vector<SchreierGenerator> nontrivial;  // generators that are not the identity
  /// Relator orbits: right multiplication by a (length 3) or b (length 2)
  /// on cosets. Each lists positions into `nontrivial` of its members.
  std::vector<std::vector<std::size_t>> orbits;
  std::size_t rank = 0;           // #nontrivial - #orbits with a nontrivial member
  std::size_t euler_rank = 0;     // 1 + index/6
};

/// InvalidArgument unless the quotient is onto, injective on <a> and <b>, and
/// the transversal is a prefix-closed set of coset representatives with the
/// identity first.
SchreierCertificate reidemeister_schreier(const FreeProductQuotient& q,
                                          const std::vector<FreeProductWord>& transversal);

/// True iff `claimed` is a free basis obtained from the Schreier generators by
/// deleting, in every orbit with a nontrivial member, exactly one of them via
/// its relator. Claimed elements match generators up to inversion.
bool is_schreier_basis(const SchreierCertificate& cert, const std::vector<FreeProductWord>& claimed);

}  // namespace lowk
