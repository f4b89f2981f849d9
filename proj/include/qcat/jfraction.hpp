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

#include "qcat/poly.hpp"

namespace qcat {

/// Polynomial in z whose coefficients are Polys; coeffs()[k] multiplies z^k.
/// Trailing zero coefficients are trimmed, so the zero polynomial is empty.
class ZPoly {
 public:
  ZPoly() = default;
  explicit ZPoly(std::vector<Poly> coeffs);
  static ZPoly constant(Poly c) { return ZPoly({std::move(c)}); }
  static ZPoly z_pow(std::size_t k);

  const std::vector<Poly>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Poly coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Poly{}; }

  friend ZPoly operator+(const ZPoly& x, const ZPoly& y);
  friend ZPoly operator-(const ZPoly& x, const ZPoly& y);
  friend ZPoly operator*(const ZPoly& x, const ZPoly& y);
  friend ZPoly operator*(const Poly& c, const ZPoly& x);
  ZPoly times_z() const;
  bool operator==(const ZPoly& y) const { return coeffs_ == y.coeffs_; }

 private:
  void trim();
  std::vector<Poly> coeffs_;
};

/// Lines of the form "z^k: <coefficient>", highest power first.
std::string to_string(const ZPoly& p);

/// 1/(1 - s_0 z - t_0 z^2/(1 - s_1 z - t_1 z^2/(1 - ...))).
struct JFraction {
  std::vector<Poly> s;
  std::vector<Poly> t;

  bool operator==(const JFraction&) const = default;
};

/// The linear functional F(z^n) = mu_n.
struct MomentFunctional {
  std::vector<Poly> moments;
};

/// First `count` moments of the J-fraction. Needs s_0..s_{floor(count/2)-1}
/// and t_0..t_{floor((count-1)/2)-1}; throws InsufficientDepth otherwise.
std::vector<Poly> moments_from_jfraction(const JFraction& jf, std::size_t count);

/// Builds monic orthogonal polynomials under F and reads off s_0..s_depth and
/// t_0..t_{depth-1}. Needs 2*depth + 2 moments. Throws Breakdown if some
/// F(p_k^2) vanishes and NotDivisible (naming the level) if an s_k or t_k is
/// not a polynomial.
JFraction jfraction_from_moments(const MomentFunctional& fn, int depth);

enum class JFamily { narayana, cstar_shift1, cstar_shift0, motzkin };

std::string to_string(JFamily f);

/// Closed-form coefficient arrays, `depth` entries of s and of t.
///   narayana:      s_0 = a+b, t_0 = q(a+b)b, s_n = q^n(a + q^(n-1) b + q^n b), t_n = q^(3n+1) b (q^n b + a)
///   cstar_shift1:  s_k = q^k (a+b), t_k = q^(2k+1) ab
///   cstar_shift0:  s_0 = a, s_k = q^(k-1) b + q^k a, t_k = q^(2k) ab
///   motzkin:       s_k = q^k, t_k = q^(2k+1)
JFraction closed_jfraction(JFamily family, int depth, const Poly& a, const Poly& b);

/// p_0 = 1, p_1 = z - s_0, p_k = (z - s_{k-1}) p_{k-1} - t_{k-2} p_{k-2}.
ZPoly orthopoly(const JFraction& jf, int n);

enum class ExplicitFamily { narayana_ab, narayana_01, cstar_shift1, cstar_shift0 };

std::string to_string(ExplicitFamily f);

/// Double-sum closed forms for the orthogonal polynomials of each family.
///
/// The sums reach q-binomials with upper index -1 at j = 0. They are read
/// with the symmetric convention [-1, 0] = [-1, -1] = 1 (zero otherwise),
/// which is what makes p_1 = z - s_0 come out right; every other out-of-range
/// q-binomial is zero. In narayana_ab the power of a+b is the q-rising
/// product (a +. b)^(n-j) = (a+b)(a+qb)...(a+q^(n-j-1)b).
ZPoly orthopoly_explicit(ExplicitFamily family, int n);

/// q-binomial with the boundary convention used by orthopoly_explicit.
Poly boundary_qbinom(int m, int r);

/// Linear extension of F; throws InsufficientMoments if deg p >= #moments.
Poly functional_apply(const MomentFunctional& fn, const ZPoly& p);

}  // namespace qcat
