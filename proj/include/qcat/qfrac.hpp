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
#include <map>
#include <string>
#include <vector>

#include "qcat/poly.hpp"

namespace qcat {

/// Denominator Π (1 - q^i)^{m_i}, keyed by i >= 1 with m_i >= 1.
using QDenominator = std::map<std::uint32_t, std::uint32_t>;

/// Expanded product Π (1 - q^i)^{m_i}.
Poly expand(const QDenominator& den);

/// A Poly over a product of (1 - q^i) factors. Every denominator that the
/// q-exponential series introduce has this shape, so no general gcd is needed.
/// The constructor strips every factor that divides the numerator; a value
/// that is a polynomial therefore ends with an empty denominator.
class QFrac {
 public:
  QFrac() = default;
  QFrac(long c) : num_(c) {}             // NOLINT(google-explicit-constructor)
  QFrac(Poly p) : num_(std::move(p)) {}  // NOLINT(google-explicit-constructor)
  QFrac(Poly num, QDenominator den);

  /// 1 / ((1-q)(1-q^2)...(1-q^k)).
  static QFrac inverse_qpochhammer(std::uint32_t k);

  const Poly& num() const { return num_; }
  const QDenominator& den() const { return den_; }
  bool is_polynomial() const { return den_.empty(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.empty() && num_.is_one(); }
  /// Throws DenominatorResidue if a denominator survives normalization.
  const Poly& to_poly() const;

  QFrac operator-() const { return {-num_, den_, Raw{}}; }
  friend QFrac operator+(const QFrac& x, const QFrac& y);
  friend QFrac operator-(const QFrac& x, const QFrac& y);
  friend QFrac operator*(const QFrac& x, const QFrac& y);
  QFrac& operator+=(const QFrac& y) { return *this = *this + y; }
  QFrac& operator-=(const QFrac& y) { return *this = *this - y; }
  QFrac& operator*=(const QFrac& y) { return *this = *this * y; }

  /// Cross-multiplication equality: u/v == u'/v' iff u v' == u' v.
  bool operator==(const QFrac& y) const;

  /// Substitution on numerator and denominator. q may only be bound to a
  /// monomial c*q^m with c = 1 (so (1 - q^i) maps to (1 - q^{mi})).
  QFrac substitute(const Bindings& bindings) const;

  /// Sum of many fractions over one common denominator, normalized once.
  static QFrac sum(const std::vector<QFrac>& parts);
  /// Product without stripping factors; only meant as input to sum().
  static QFrac unnormalized_product(const QFrac& x, const QFrac& y);
  /// q^m * x. Never changes which factors divide the numerator.
  QFrac times_q_pow(std::uint32_t m) const;

 private:
  struct Raw {};
  QFrac(Poly num, QDenominator den, Raw) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  Poly num_;
  QDenominator den_;
};

std::string to_string(const QFrac& f);

}  // namespace qcat
