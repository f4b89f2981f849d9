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

#include <cstdint>
#include <string>
#include <vector>

#include "qcat/errors.hpp"
#include "qcat/poly.hpp"
#include "qcat/qfrac.hpp"

namespace qcat {

namespace detail {

inline Poly product(const Poly& x, const Poly& y) {
  return x * y;
}
inline QFrac product(const QFrac& x, const QFrac& y) {
  return QFrac::unnormalized_product(x, y);
}

inline Poly sum(const std::vector<Poly>& parts) {
  Poly r;
  for (const auto& p : parts) r += p;
  return r;
}
inline QFrac sum(const std::vector<QFrac>& parts) {
  return QFrac::sum(parts);
}

inline Poly times_q_pow(const Poly& x, std::uint32_t m) {
  return x.mul_monomial(Integer(1), Monomial::power(Var::q, m));
}
inline QFrac times_q_pow(const QFrac& x, std::uint32_t m) {
  return x.times_q_pow(m);
}

inline Poly substitute(const Poly& x, const Bindings& b) {
  return qcat::substitute(x, b);
}
inline QFrac substitute(const QFrac& x, const Bindings& b) {
  return x.substitute(b);
}

}  // namespace detail

/// Power series in z known through z^(order-1). Binary operations truncate to
/// the smaller order of their operands.
template <class C>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order) : coeffs_(order) {
    if (order == 0) throw UsageError("series order must be at least 1");
  }
  explicit TruncatedSeries(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw UsageError("series order must be at least 1");
  }

  static TruncatedSeries one(std::size_t order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = C(1);
    return s;
  }

  /// c * z^power, truncated.
  static TruncatedSeries monomial(std::size_t order, const C& c, std::size_t power) {
    TruncatedSeries s(order);
    if (power < order) s.coeffs_[power] = c;
    return s;
  }

  std::size_t order() const { return coeffs_.size(); }
  const C& operator[](std::size_t k) const { return coeffs_.at(k); }
  C& operator[](std::size_t k) { return coeffs_.at(k); }
  const std::vector<C>& coefficients() const { return coeffs_; }

  TruncatedSeries truncated(std::size_t order) const {
    if (order == 0 || order > coeffs_.size()) throw UsageError("cannot extend a truncated series");
    return TruncatedSeries(std::vector<C>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order)));
  }

  friend TruncatedSeries operator+(const TruncatedSeries& x, const TruncatedSeries& y) {
    TruncatedSeries r(std::min(x.order(), y.order()));
    for (std::size_t k = 0; k < r.order(); ++k) r.coeffs_[k] = x.coeffs_[k] + y.coeffs_[k];
    return r;
  }

  friend TruncatedSeries operator-(const TruncatedSeries& x, const TruncatedSeries& y) {
    TruncatedSeries r(std::min(x.order(), y.order()));
    for (std::size_t k = 0; k < r.order(); ++k) r.coeffs_[k] = x.coeffs_[k] - y.coeffs_[k];
    return r;
  }

  TruncatedSeries operator-() const {
    TruncatedSeries r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend TruncatedSeries operator*(const TruncatedSeries& x, const TruncatedSeries& y) {
    TruncatedSeries r(std::min(x.order(), y.order()));
    std::vector<C> parts;
    for (std::size_t n = 0; n < r.order(); ++n) {
      parts.clear();
      for (std::size_t k = 0; k <= n; ++k) {
        if (x.coeffs_[k].is_zero() || y.coeffs_[n - k].is_zero()) continue;
        parts.push_back(detail::product(x.coeffs_[k], y.coeffs_[n - k]));
      }
      r.coeffs_[n] = detail::sum(parts);
    }
    return r;
  }

  /// Coefficientwise scaling by a constant of the coefficient ring.
  friend TruncatedSeries operator*(const C& c, const TruncatedSeries& x) {
    TruncatedSeries r(x.order());
    for (std::size_t k = 0; k < r.order(); ++k) r.coeffs_[k] = c * x.coeffs_[k];
    return r;
  }

  /// Requires a divisor with constant term exactly 1.
  friend TruncatedSeries operator/(const TruncatedSeries& x, const TruncatedSeries& d) {
    if (!d.coeffs_[0].is_one()) throw NonUnitConstantTerm("series divisor must have constant term 1");
    TruncatedSeries r(std::min(x.order(), d.order()));
    std::vector<C> parts;
    for (std::size_t n = 0; n < r.order(); ++n) {
      parts.clear();
      parts.push_back(x.coeffs_[n]);
      for (std::size_t k = 1; k <= n; ++k) {
        if (d.coeffs_[k].is_zero() || r.coeffs_[n - k].is_zero()) continue;
        parts.push_back(-detail::product(d.coeffs_[k], r.coeffs_[n - k]));
      }
      r.coeffs_[n] = detail::sum(parts);
    }
    return r;
  }

  /// z -> q^r z, i.e. c_k -> q^(rk) c_k.
  TruncatedSeries scale_z(std::uint32_t r) const {
    TruncatedSeries s(order());
    for (std::size_t k = 0; k < order(); ++k)
      s.coeffs_[k] = detail::times_q_pow(coeffs_[k], r * static_cast<std::uint32_t>(k));
    return s;
  }

  /// z -> -z.
  TruncatedSeries negate_z() const {
    TruncatedSeries s = *this;
    for (std::size_t k = 1; k < order(); k += 2) s.coeffs_[k] = -s.coeffs_[k];
    return s;
  }

  /// Multiplication by z^k; the order is kept, so the top k coefficients drop.
  TruncatedSeries shift_up(std::size_t k) const {
    TruncatedSeries s(order());
    for (std::size_t n = k; n < order(); ++n) s.coeffs_[n] = coeffs_[n - k];
    return s;
  }

  /// Division by z^k; requires the low k coefficients to vanish and loses k orders.
  TruncatedSeries shift_down(std::size_t k) const {
    if (k >= order()) throw InsufficientCoefficients("shift_down past the truncation order");
    for (std::size_t n = 0; n < k; ++n) {
      if (!coeffs_[n].is_zero()) throw NotDivisible("series is not divisible by z^" + std::to_string(k));
    }
    return TruncatedSeries(std::vector<C>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
  }

  /// Substitution in the coefficient ring (e.g. b -> q b).
  TruncatedSeries substitute(const Bindings& bindings) const {
    TruncatedSeries s(order());
    for (std::size_t k = 0; k < order(); ++k) s.coeffs_[k] = detail::substitute(coeffs_[k], bindings);
    return s;
  }

  /// Index of the first coefficient where the two series differ, up to the
  /// smaller order; -1 if none.
  long first_difference(const TruncatedSeries& y) const {
    const std::size_t n = std::min(order(), y.order());
    for (std::size_t k = 0; k < n; ++k) {
      if (!(coeffs_[k] == y.coeffs_[k])) return static_cast<long>(k);
    }
    return -1;
  }

  bool operator==(const TruncatedSeries& y) const { return order() == y.order() && first_difference(y) < 0; }

 private:
  std::vector<C> coeffs_;
};

using Series = TruncatedSeries<QFrac>;
using PolySeries = TruncatedSeries<Poly>;

/// Throws DenominatorResidue if any coefficient is not a polynomial.
PolySeries to_poly_series(const Series& s);
Series to_series(const PolySeries& s);

/// Generalized q-exponential sum_k q^(r*binom(k,2)) z^k / ((1-q)...(1-q^k)).
Series build_Er(int r, std::size_t order);

/// E_r(-q^n z) / E_r(-z); its z^k coefficient is the q-Gould polynomial G(k, n, r).
PolySeries build_Gr(int r, int n, std::size_t order);

/// sum_k (-1)^k q^binom(k,2) (a +. b)^k / ((1-q)...(1-q^k)) z^k.
Series build_h(const Poly& a, const Poly& b, std::size_t order);

/// As build_h with the Rogers-Szego polynomial r_k(a, b) in place of (a +. b)^k.
Series build_hstar(const Poly& a, const Poly& b, std::size_t order);

enum class RatioKind {
  f_catalan,   ///< E_2(-qz)/E_2(-z)
  f_narayana,  ///< h(qz)/h(z)
  f_star,      ///< h*(qz)/h*(z)
  F,           ///< 1 + a z f*(z)
  g,           ///< defined by f(z) = 1 + (a+b) z g(z/q)
};

std::string to_string(RatioKind kind);

/// Generating function of the given kind with polynomial coefficients.
PolySeries build_ratio_series(RatioKind kind, const Poly& a, const Poly& b, std::size_t order);

}  // namespace qcat
