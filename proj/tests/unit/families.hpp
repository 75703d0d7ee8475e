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
#include <vector>

#include "lowk/finite_group.hpp"

namespace lowk::testing {

// Every supported family member with order at most max_order: cyclic, dicyclic
// (m >= 2), the matrix model of Q_{2^k}, and T*, O*, I*.
inline std::vector<FiniteGroup> family_instances(std::uint64_t max_order) {
  std::vector<FiniteGroup> out;
  for (std::uint64_t m = 1; m <= max_order; ++m) out.push_back(build_cyclic(m));
  for (std::uint64_t m = 2; 4 * m <= max_order; ++m) out.push_back(build_dicyclic(m));
  for (unsigned k = 3; k <= 13 && (std::uint64_t{1} << k) <= max_order; ++k)
    out.push_back(build_generalized_quaternion(k));
  if (max_order >= 24) out.push_back(build_binary_polyhedral(BinaryPolyhedral::T));
  if (max_order >= 48) out.push_back(build_binary_polyhedral(BinaryPolyhedral::O));
  if (max_order >= 120) out.push_back(build_binary_polyhedral(BinaryPolyhedral::I));
  return out;
}

inline std::vector<FiniteGroup> binary_polyhedral_groups() {
  return {build_binary_polyhedral(BinaryPolyhedral::T), build_binary_polyhedral(BinaryPolyhedral::O),
          build_binary_polyhedral(BinaryPolyhedral::I)};
}

}  // namespace lowk::testing
