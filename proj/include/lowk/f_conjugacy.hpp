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

#include "lowk/error.hpp"
#include "lowk/finite_group.hpp"
#include "lowk/galois_images.hpp"

namespace lowk {

struct FPartition {
  FieldDescriptor field;
  std::uint64_t modulus_used = 1;
  /// Blocks sorted internally; listed by least element id.
  std::vector<std::vector<Elem>> blocks;
};

/// m-hat: the group exponent, with every factor of p removed in characteristic p.
std::uint64_t power_modulus(const FiniteGroup& g, const FieldDescriptor& field);

/// f ~ g iff f^t is conjugate to g for some t in phi_image(field, m-hat).
/// In characteristic p only p-regular elements are partitioned.
FPartition f_partition(const FiniteGroup& g, const FieldDescriptor& field,
                       std::uint64_t max_order = kDefaultBruteForceBound);

/// Number of F-conjugacy classes (Witt-Berman count).
std::uint64_t r_F(const FiniteGroup& g, const FieldDescriptor& field,
                  std::uint64_t max_order = kDefaultBruteForceBound);

/// Diagnostic variant: each element g is moved by the image reduced modulo
/// order_of(g) instead of the single modulus m-hat.
FPartition f_partition_per_order(const FiniteGroup& g, const FieldDescriptor& field,
                                 std::uint64_t max_order = kDefaultBruteForceBound);

}  // namespace lowk
