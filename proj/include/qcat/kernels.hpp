/*
 * Copyright 2026 The qcat Authors
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

#include <vector>

#include "qcat/poly.hpp"

// Data-parallel kernels. Each OpenMP kernel has a serial twin with identical
// results; the serial versions are the reference the tests compare against
// and the baseline for bench/.
namespace qcat::kernels {

using Matrix = std::vector<std::vector<Poly>>;

/// Product operand sizes (|lhs| * |rhs|) below this run serially.
inline constexpr std::size_t kParallelMultiplyThreshold = 1U << 14;

Poly multiply(const Poly& lhs, const Poly& rhs);
Poly multiply_serial(const Poly& lhs, const Poly& rhs);

/// Fraction-free Bareiss elimination with row pivoting. Every division is
/// exact over Z[q, a, b]. The matrix must be square.
Poly bareiss_determinant(Matrix m);
Poly bareiss_determinant_serial(Matrix m);

int max_threads();

}  // namespace qcat::kernels
