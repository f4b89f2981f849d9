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

// Recurrence generators. They share nothing with series.hpp so the two
// routes can check each other. Memo tables are guarded by a mutex; concurrent
// callers see identical values.
namespace qcat::sequences {

/// Lower-triangular table; row n holds entries k = 0..n.
struct Triangle {
  std::vector<std::vector<Poly>> rows;

  const Poly& at(std::size_t n, std::size_t k) const { return rows.at(n).at(k); }
  std::size_t size() const { return rows.size(); }
};

/// Carlitz-Riordan q-Catalan: C_n = sum_{k<n} q^k C_k C_{n-k-1}, C_0 = 1.
Poly qcatalan(int n);

/// C_n(a,b,q) = a C_{n-1} + b sum_{k<n} q^k C_k C_{n-k-1}, C_0 = 1.
Poly qnarayana_poly(int n);

/// N(n,k,q) for n = 0..max_row: C_n(a,b,q) = sum_k N(n,k,q) (a +. b)^k b^(n-k),
/// where (a +. b)^k = (a+b)(a+qb)...(a+q^(k-1)b).
Triangle narayana_triangle(int max_row);

/// C*_n(a,b,q) = a C*_{n-1} + b sum_{k<=n-2} q^k C*_k C*_{n-1-k}, C*_0 = 1.
Poly cstar(int n);

/// N*(n,k,q) = coefficient of a^k b^(n-k) in C*_n, n = 0..max_row.
Triangle nstar_triangle(int max_row);

/// M_n = M_{n-1} + sum_{i+j=n-2} q^(j+1) M_i M_j, M_0 = 1.
Poly qmotzkin(int n);

/// r_n = (a+b) r_{n-1} + ab (q^(n-1) - 1) r_{n-2}, r_0 = 1, r_1 = a + b.
Poly rogers_szego(int n);

/// q-Gould polynomial G(k,n,r) = sum_{m<n} q^m G(k-1, m+r, r), G(0,n,r) = 1.
Poly gould(int k, int n, int r);

/// Integer Narayana number binom(n,k) binom(n,k-1) / n (zero outside 1 <= k <= n).
Integer narayana_number(int n, int k);

}  // namespace qcat::sequences
