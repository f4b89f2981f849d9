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

#include "qcat/hankel.hpp"

#include "qcat/errors.hpp"
#include "qcat/kernels.hpp"
#include "qcat/sequences.hpp"

namespace qcat {

namespace {

kernels::Matrix hankel_matrix(std::span<const Poly> seq, int shift, int n) {
  if (shift < 0 || n < 0) throw UsageError("Hankel shift and size must be nonnegative");
  const auto needed = static_cast<std::size_t>(2 * n + shift + 1);
  if (seq.size() < needed) {
    throw InsufficientMoments("Hankel determinant of size " + std::to_string(n + 1) + " at shift " +
                              std::to_string(shift) + " needs " + std::to_string(needed) + " terms, got " +
                              std::to_string(seq.size()));
  }
  const auto size = static_cast<std::size_t>(n) + 1;
  kernels::Matrix m(size, std::vector<Poly>(size));
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) m[i][j] = seq[i + j + static_cast<std::size_t>(shift)];
  }
  return m;
}

Poly qp(long e) {
  return Poly::q_pow(static_cast<std::uint32_t>(e));
}

long binom2(long k) {
  return k * (k - 1) / 2;
}

/// prod_{j=0}^{top} (a + q^j b)^(top + 1 - j).
Poly staircase(const Poly& a, const Poly& b, long top) {
  Poly r(1);
  for (long j = 0; j <= top; ++j) r *= (a + qp(j) * b).pow(static_cast<std::uint32_t>(top + 1 - j));
  return r;
}

}  // namespace

std::string to_string(HankelFamily f) {
  switch (f) {
    case HankelFamily::qcatalan: return "qcatalan";
    case HankelFamily::narayana: return "narayana";
    case HankelFamily::cstar: return "cstar";
    case HankelFamily::fstar: return "fstar";
    case HankelFamily::motzkin: return "motzkin";
  }
  return "?";
}

Poly hankel_det(std::span<const Poly> seq, int shift, int n) {
  return kernels::bareiss_determinant(hankel_matrix(seq, shift, n));
}

Poly hankel_det_serial(std::span<const Poly> seq, int shift, int n) {
  return kernels::bareiss_determinant_serial(hankel_matrix(seq, shift, n));
}

std::vector<Poly> family_sequence(HankelFamily family, std::size_t count, const Poly& a, const Poly& b) {
  Bindings ab;
  ab.set(Var::a, a).set(Var::b, b);
  std::vector<Poly> seq;
  seq.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const int n = static_cast<int>(i);
    switch (family) {
      case HankelFamily::qcatalan: seq.push_back(sequences::qcatalan(n)); break;
      case HankelFamily::motzkin: seq.push_back(sequences::qmotzkin(n)); break;
      case HankelFamily::narayana: seq.push_back(substitute(sequences::qnarayana_poly(n), ab)); break;
      case HankelFamily::cstar: seq.push_back(substitute(sequences::cstar(n), ab)); break;
      case HankelFamily::fstar:
        seq.push_back(substitute(exact_div(sequences::cstar(n + 1), Poly::var(Var::a)), ab));
        break;
    }
  }
  return seq;
}

Poly expected_hankel(HankelFamily family, int shift, int n_int, const Poly& a, const Poly& b) {
  if (n_int < 0) throw UsageError("Hankel size must be nonnegative");
  const long n = n_int;
  const auto tri = static_cast<std::uint32_t>(binom2(n + 1));
  const long sum_squares = n * (n + 1) * (2 * n + 1) / 6;
  auto unsupported = [&]() -> Poly {
    throw UnsupportedCombination("no closed form for family " + to_string(family) + " at shift " +
                                 std::to_string(shift));
  };
  auto fstar_formula = [&](int s) {
    if (s == 0) return (a * b).pow(tri) * qp(sum_squares);
    Poly divided_difference;  // (a^(n+2) - b^(n+2)) / (a - b)
    for (long i = 0; i <= n + 1; ++i) {
      divided_difference += a.pow(static_cast<std::uint32_t>(i)) * b.pow(static_cast<std::uint32_t>(n + 1 - i));
    }
    return (a * b * qp(1)).pow(tri) * qp(sum_squares) * divided_difference;
  };

  switch (family) {
    case HankelFamily::qcatalan:
      if (shift == 0) return qp(n * (n + 1) * (4 * n - 1) / 6);
      if (shift == 1) return qp(n * (n + 1) * (4 * n + 5) / 6);
      return unsupported();
    case HankelFamily::narayana:
      if (shift == 0) return qp(n * n * (n + 1) / 2) * b.pow(tri) * staircase(a, b, n - 1);
      if (shift == 1) return qp(n * (n + 1) * (n + 1) / 2) * b.pow(tri) * staircase(a, b, n);
      return unsupported();
    case HankelFamily::fstar:
      if (shift == 0 || shift == 1) return fstar_formula(shift);
      return unsupported();
    case HankelFamily::cstar:
      if (shift == 0) return (a * b).pow(tri) * qp((n * (n + 1) * (n - 1)) / 3);
      if (shift == 1 || shift == 2) return a.pow(static_cast<std::uint32_t>(n + 1)) * fstar_formula(shift - 1);
      return unsupported();
    case HankelFamily::motzkin:
      if (shift == 0) return qp(sum_squares);
      if (shift == 1) return Poly(motzkin_delta(static_cast<std::size_t>(n + 1))) * qp(n * (n + 1) * (n + 2) / 3);
      return unsupported();
  }
  return unsupported();
}

HankelReport hankel_report(HankelFamily family, int shift, int n, const Poly& a, const Poly& b) {
  HankelReport r{family, shift, n, {}, expected_hankel(family, shift, n, a, b), false};
  const auto seq = family_sequence(family, static_cast<std::size_t>(2 * n + shift + 1), a, b);
  r.computed = hankel_det(seq, shift, n);
  r.match = r.computed == r.expected;
  return r;
}

std::vector<Poly> d_sequence(const JFraction& jf, std::size_t count) {
  if (count == 0) return {};
  const std::size_t need_s = count - 1;
  const std::size_t need_t = count >= 2 ? count - 2 : 0;
  if (jf.s.size() < need_s || jf.t.size() < need_t) {
    throw InsufficientCoefficients(std::to_string(count) + " d-terms need " + std::to_string(need_s) + " s and " +
                                   std::to_string(need_t) + " t coefficients");
  }
  std::vector<Poly> d{Poly(1)};
  if (count >= 2) d.push_back(jf.s[0]);
  for (std::size_t k = 2; k < count; ++k) d.push_back(jf.s[k - 1] * d[k - 1] - jf.t[k - 2] * d[k - 2]);
  return d;
}

int motzkin_delta(std::size_t n) {
  static constexpr int kPeriod[6] = {1, 1, 0, -1, -1, 0};
  return kPeriod[n % 6];
}

}  // namespace qcat
