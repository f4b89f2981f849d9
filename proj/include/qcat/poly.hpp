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

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qcat {

using Integer = mpz_class;

/// Indeterminates of the coefficient ring. `u` is an auxiliary variable for
/// basis changes and algebraic substitutions; it never appears in results.
enum class Var : std::uint8_t { q = 0, a = 1, b = 2, u = 3 };

inline constexpr std::size_t kNumVars = 4;

char var_name(Var v);

struct Monomial {
  std::array<std::uint32_t, kNumVars> exp{};

  std::uint32_t operator[](Var v) const { return exp[static_cast<std::size_t>(v)]; }
  std::uint32_t& operator[](Var v) { return exp[static_cast<std::size_t>(v)]; }

  static Monomial power(Var v, std::uint32_t e) {
    Monomial m;
    m[v] = e;
    return m;
  }

  std::uint64_t total_degree() const;
  bool is_one() const;

  /// Throws ExponentOverflow instead of wrapping.
  Monomial operator*(const Monomial& other) const;
  /// Returns nullopt when `other` does not divide *this.
  std::optional<Monomial> divide(const Monomial& other) const;

  bool operator==(const Monomial&) const = default;
};

/// Graded order: total degree first, then exponents compared in the order
/// u, b, a, q. This is the canonical print order and a monomial order, so the
/// last term of a Poly is its leading term.
bool monomial_less(const Monomial& x, const Monomial& y);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Sparse polynomial in q, a, b (and u) with arbitrary-precision integer
/// coefficients. Terms are kept sorted by `monomial_less` with no zero
/// coefficients, so equal polynomials have identical term vectors.
class Poly {
 public:
  using Term = std::pair<Monomial, Integer>;

  Poly() = default;
  Poly(long c);  // NOLINT(google-explicit-constructor)
  explicit Poly(const Integer& c);

  static Poly var(Var v, std::uint32_t power = 1);
  static Poly q_pow(std::uint32_t power) { return var(Var::q, power); }
  static Poly term(const Integer& c, const Monomial& m);
  /// Accepts terms in any order with repeats and zeros.
  static Poly from_terms(std::vector<Term> terms);

  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  /// Coefficient of the constant monomial.
  Integer constant_term() const;
  Integer coefficient(const Monomial& m) const;
  std::uint32_t degree(Var v) const;
  bool contains(Var v) const { return degree(v) > 0; }
  const Term& leading_term() const { return terms_.back(); }

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  bool operator==(const Poly& rhs) const;

  Poly mul_monomial(const Integer& c, const Monomial& m) const;
  Poly pow(std::uint32_t e) const;

  /// Groups terms by the power of `v`: result[k] is the coefficient of v^k.
  std::vector<Poly> coefficients_in(Var v) const;

 private:
  friend class PolyBuilder;
  std::vector<Term> terms_;
};

/// Exact quotient; throws NotDivisible or DivByZero.
Poly exact_div(const Poly& num, const Poly& den);
std::optional<Poly> try_exact_div(const Poly& num, const Poly& den);

/// Quotient by (1 - q^i), or nullopt if it does not divide.
std::optional<Poly> try_div_one_minus_q_pow(const Poly& p, std::uint32_t i);

/// Simultaneous substitution; unbound variables map to themselves.
class Bindings {
 public:
  Bindings() = default;
  Bindings& set(Var v, Poly image);
  const std::optional<Poly>& operator[](Var v) const { return images_[static_cast<std::size_t>(v)]; }
  bool binds(Var v) const { return images_[static_cast<std::size_t>(v)].has_value(); }

 private:
  std::array<std::optional<Poly>, kNumVars> images_{};
};

Poly substitute(const Poly& p, const Bindings& bindings);

/// Gaussian binomial [n k]_q; zero outside 0 <= k <= n (and for n < 0).
Poly qbinom(int n, int k);

/// (x + y)(x + q y)...(x + q^(k-1) y).
Poly qrising(const Poly& x, const Poly& y, int k);

/// Integer binomial coefficient, zero outside 0 <= k <= n.
Integer binomial(long n, long k);

/// Canonical text, e.g. "1 + 2*q + q^2", "-a*b + q^3*b^2", "0".
std::string to_string(const Poly& p);

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace qcat
