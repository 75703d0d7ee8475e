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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lowk/abelian_group.hpp"
#include "lowk/error.hpp"
#include "lowk/finite_group.hpp"
#include "lowk/galois_images.hpp"

namespace lowk {

inline constexpr const char* kSchema = "lowk/1";

/// One computed invariant. `value` is meaningful only for Known entries that
/// are abelian groups; other data (counts, component lists) goes in details.
struct KEntry {
  enum class Status { Known, Unknown, Unsupported, TooLarge };
  Status status = Status::Known;
  std::optional<AbelianGroupExpr> value;
  std::string reason;
  std::vector<std::string> provenance;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();

  nlohmann::ordered_json to_json() const;
};

struct KReport {
  std::string group;
  std::vector<std::pair<std::string, KEntry>> entries;  // in output order
  nlohmann::ordered_json extra = nlohmann::ordered_json::object();

  const KEntry& at(const std::string& key) const;
  /// {"schema", "group", "invariants": {...}, ...extra}.
  nlohmann::ordered_json to_json() const;
};

/// Nil groups of Z[Q8] for an automorphism of order 1, 2 or 3 (i = 0 or 1):
/// (Z_2)^oo for orders 1 and 3, the named exponent-2-or-4 summand W for 2.
AbelianGroupExpr nil_groups_q8(int i, int twist_order);

/// A contribution of one family of maximal infinite virtually cyclic
/// subgroups to Nil_i.
struct NilContribution {
  std::string subgroup;     // e.g. "Q8 ⋊_3 Z"
  AbelianGroupExpr value;   // Nil summand of one such subgroup
  std::string rule;
};

/// Contributions to Nil_i from the maximal infinite virtually cyclic
/// subgroups of B4(S^2), each occurring for countably many conjugacy classes.
std::vector<NilContribution> b4_nil_contributions(int i);

/// The group G with Nil_i = countable direct sum of copies of G: the sum of the
/// distinct contributions, since a countable sum absorbs repeats.
AbelianGroupExpr b4_nil_summand(int i);

/// Kernel and cokernel of A -> B_1 + ... + B_k from per-component facts.
enum class MapFact { Zero, Isomorphism };
struct KerCoker {
  AbelianGroupExpr kernel, cokernel;
};
KerCoker assemble(const AbelianGroupExpr& source,
                  const std::vector<std::pair<AbelianGroupExpr, MapFact>>& targets);

/// Wh = Z + Nil_1, reduced K_0 = Z_2 + Nil_0, K_{-1} = Z_2 + Z, assembled
/// from the finite-group values of Q8, Q16 and T*.
KReport b4_lower_k_report();

struct GroupRequest {
  std::string family;  // cyclic, dicyclic, quaternion, tstar, ostar, istar
  std::uint64_t param = 0;  // m, or k for quaternion
  std::vector<std::string> invariants{"wh", "k0", "kminus1"};
  FieldDescriptor field = FieldDescriptor::rational();
};

/// InvalidArgument for unknown families, invariants or bad parameters.
FiniteGroup build_family_group(const std::string& family, std::uint64_t param);
const std::vector<std::string>& known_invariants();

/// Per-invariant failures (TooLarge, Unsupported) are recorded in the entry
/// rather than thrown.
KReport group_report(const FiniteGroup& g, const std::vector<std::string>& invariants,
                     const FieldDescriptor& field, std::uint64_t max_order = kDefaultBruteForceBound);
KReport group_report(const GroupRequest& req, std::uint64_t max_order = kDefaultBruteForceBound);

/// {"schema", "n", "maximal_finite": [...]} plus, when vc is set,
/// "virtually_cyclic" (odd n) or "virtually_cyclic" and
/// "maximal_virtually_cyclic" (n = 4). Unsupported for other even n.
nlohmann::ordered_json classify_json(std::uint64_t n, bool vc);

/// {"schema", "suite", "passed", "total", "all_passed", "suites": [...]}.
nlohmann::ordered_json b4_verify_json(const std::string& suite);

}  // namespace lowk
