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

#include "qcat/qfrac.hpp"

#include <algorithm>

#include "qcat/errors.hpp"

namespace qcat {

namespace {

Poly one_minus_q_pow(std::uint32_t i) {
  return Poly(1) - Poly::q_pow(i);
}

/// Π over (lcm \ den) of the missing factors.
Poly complement(const QDenominator& common, const QDenominator& den) {
  Poly r(1);
  for (const auto& [i, m] : common) {
    auto it = den.find(i);
    const std::uint32_t have = it == den.end() ? 0 : it->second;
    if (m > have) r *= one_minus_q_pow(i).pow(m - have);
  }
  return r;
}

void merge_max(QDenominator& into, const QDenominator& den) {
  for (const auto& [i, m] : den) {
    auto& slot = into[i];
    slot = std::max(slot, m);
  }
}

}  // namespace

Poly expand(const QDenominator& den) {
  Poly r(1);
  for (const auto& [i, m] : den) r *= one_minus_q_pow(i).pow(m);
  return r;
}

QFrac::QFrac(Poly num, QDenominator den) : num_(std::move(num)), den_(std::move(den)) {
  for (auto it = den_.begin(); it != den_.end();) {
    if (it->first == 0) throw DivByZero("denominator factor (1 - q^0)");
    it = it->second == 0 ? den_.erase(it) : std::next(it);
  }
  normalize();
}

QFrac QFrac::inverse_qpochhammer(std::uint32_t k) {
  QDenominator den;
  for (std::uint32_t i = 1; i <= k; ++i) den[i] = 1;
  return {Poly(1), std::move(den), Raw{}};
}

void QFrac::normalize() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  // Large factors first: they remove the most at once.
  std::vector<std::uint32_t> factors;
  for (const auto& [i, m] : den_) factors.push_back(i);
  for (auto i = factors.rbegin(); i != factors.rend(); ++i) {
    auto& multiplicity = den_[*i];
    while (multiplicity > 0) {
      auto q = try_div_one_minus_q_pow(num_, *i);
      if (!q) break;
      num_ = std::move(*q);
      --multiplicity;
    }
    if (multiplicity == 0) den_.erase(*i);
  }
}

const Poly& QFrac::to_poly() const {
  if (!den_.empty()) throw DenominatorResidue("expected a polynomial, got " + to_string(*this));
  return num_;
}

QFrac operator+(const QFrac& x, const QFrac& y) {
  return QFrac::sum({x, y});
}

QFrac operator-(const QFrac& x, const QFrac& y) {
  return QFrac::sum({x, -y});
}

QFrac operator*(const QFrac& x, const QFrac& y) {
  if (x.is_zero() || y.is_zero()) return {};
  QDenominator den = x.den_;
  for (const auto& [i, m] : y.den_) den[i] += m;
  if (den.empty()) return QFrac(x.num_ * y.num_);
  return {x.num_ * y.num_, std::move(den)};
}

QFrac QFrac::unnormalized_product(const QFrac& x, const QFrac& y) {
  if (x.is_zero() || y.is_zero()) return {};
  QDenominator den = x.den_;
  for (const auto& [i, m] : y.den_) den[i] += m;
  return {x.num_ * y.num_, std::move(den), Raw{}};
}

QFrac QFrac::times_q_pow(std::uint32_t m) const {
  return {num_.mul_monomial(Integer(1), Monomial::power(Var::q, m)), den_, Raw{}};
}

QFrac QFrac::sum(const std::vector<QFrac>& parts) {
  QDenominator common;
  bool all_polynomial = true;
  for (const auto& p : parts) {
    if (p.is_zero()) continue;
    merge_max(common, p.den_);
    all_polynomial = all_polynomial && p.den_.empty();
  }
  Poly num;
  if (all_polynomial) {
    for (const auto& p : parts) num += p.num_;
    return QFrac(std::move(num));
  }
  for (const auto& p : parts) {
    if (p.is_zero()) continue;
    num += p.den_ == common ? p.num_ : p.num_ * complement(common, p.den_);
  }
  return {std::move(num), std::move(common)};
}

bool QFrac::operator==(const QFrac& y) const {
  if (den_ == y.den_) return num_ == y.num_;
  QDenominator common = den_;
  merge_max(common, y.den_);
  return num_ * complement(common, den_) == y.num_ * complement(common, y.den_);
}

QFrac QFrac::substitute(const Bindings& bindings) const {
  std::uint32_t scale = 1;
  if (bindings.binds(Var::q) && !den_.empty()) {
    const Poly& image = *bindings[Var::q];
    const bool pure_power = image.size() == 1 && image.leading_term().second == 1 &&
                            image.leading_term().first.total_degree() == image.leading_term().first[Var::q] &&
                            image.leading_term().first[Var::q] > 0;
    if (!pure_power) {
      throw UsageError("q in a fractional coefficient can only be replaced by a power of q");
    }
    scale = image.leading_term().first[Var::q];
  }
  QDenominator den;
  for (const auto& [i, m] : den_) den[i * scale] += m;
  return {qcat::substitute(num_, bindings), std::move(den)};
}

std::string to_string(const QFrac& f) {
  if (f.is_polynomial()) return to_string(f.num());
  std::string out = "(" + to_string(f.num()) + ")/(";
  bool first = true;
  for (const auto& [i, m] : f.den()) {
    if (!first) out += "*";
    first = false;
    out += "(1 - q";
    if (i > 1) out += "^" + std::to_string(i);
    out += ")";
    if (m > 1) out += "^" + std::to_string(m);
  }
  return out + ")";
}

}  // namespace qcat
