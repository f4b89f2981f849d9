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

#include <span>
#include <string>
#include <vector>

#include "qcat/jfraction.hpp"
#include "qcat/poly.hpp"

namespace qcat {

/// `fstar` is the coefficient sequence of f*(z), i.e. C*_{n+1}/a.
enum class HankelFamily { qcatalan, narayana, cstar, fstar, motzkin };

std::string to_string(HankelFamily f);

struct HankelReport {
  HankelFamily family;
  int shift;
  int n;
  Poly computed;
  Poly expected;
  bool match;
};

/// det(seq[i+j+shift])_{i,j=0..n} by Bareiss elimination (OpenMP kernel).
/// Throws InsufficientMoments if seq has fewer than 2n+shift+1 entries.
Poly hankel_det(std::span<const Poly> seq, int shift, int n);
/// Same determinant through the serial reference kernel.
Poly hankel_det_serial(std::span<const Poly> seq, int shift, int n);

/// The first `count` terms of the family's sequence with a, b substituted.
std::vector<Poly> family_sequence(HankelFamily family, std::size_t count, const Poly& a, const Poly& b);

/// Closed-form Hankel determinant. Supported shifts: qcatalan, narayana,
/// fstar and motzkin take 0 and 1; cstar takes 0, 1 and 2. Anything else
/// throws UnsupportedCombination.
///
/// For cstar at shifts 1 and 2 the classical product formulas describe the
/// f* coefficients C*_{n+1}/a; on C* itself each row carries one more factor
/// of a, so the value returned is a^(n+1) times that formula.
Poly expected_hankel(HankelFamily family, int shift, int n, const Poly& a, const Poly& b);

HankelReport hankel_report(HankelFamily family, int shift, int n, const Poly& a, const Poly& b);

/// d_0 = 1, d_1 = s_0, d_k = s_{k-1} d_{k-1} - t_{k-2} d_{k-2}; returns d_0..d_{count-1}.
std::vector<Poly> d_sequence(const JFraction& jf, std::size_t count);

/// The integer sequence 1, 1, 0, -1, -1, 0 repeated.
int motzkin_delta(std::size_t n);

}  // namespace qcat
