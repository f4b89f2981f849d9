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

#include "qcat/jfraction.hpp"

#include <algorithm>

#include "qcat/errors.hpp"
#include "qcat/series.hpp"

namespace qcat {

ZPoly::ZPoly(std::vector<Poly> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

ZPoly ZPoly::z_pow(std::size_t k) {
  std::vector<Poly> c(k + 1);
  c[k] = Poly(1);
  return ZPoly(std::move(c));
}

void ZPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

ZPoly operator+(const ZPoly& x, const ZPoly& y) {
  std::vector<Poly> c(std::max(x.coeffs_.size(), y.coeffs_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = x.coefficient(k) + y.coefficient(k);
  return ZPoly(std::move(c));
}

ZPoly operator-(const ZPoly& x, const ZPoly& y) {
  std::vector<Poly> c(std::max(x.coeffs_.size(), y.coeffs_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = x.coefficient(k) - y.coefficient(k);
  return ZPoly(std::move(c));
}

ZPoly operator*(const ZPoly& x, const ZPoly& y) {
  if (x.is_zero() || y.is_zero()) return {};
  std::vector<Poly> c(x.coeffs_.size() + y.coeffs_.size() - 1);
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < y.coeffs_.size(); ++j) c[i + j] += x.coeffs_[i] * y.coeffs_[j];
  }
  return ZPoly(std::move(c));
}

ZPoly operator*(const Poly& s, const ZPoly& x) {
  std::vector<Poly> c = x.coeffs_;
  for (auto& p : c) p = s * p;
  return ZPoly(std::move(c));
}

ZPoly ZPoly::times_z() const {
  if (is_zero()) return {};
  std::vector<Poly> c;
  c.reserve(coeffs_.size() + 1);
  c.emplace_back();
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return ZPoly(std::move(c));
}

std::string to_string(const ZPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = p.coeffs().size(); k-- > 0;) {
    if (!out.empty()) out += '\n';
    out += "z^" + std::to_string(k) + ": " + to_string(p.coeffs()[k]);
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<Poly> moments_from_jfraction(const JFraction& jf, std::size_t count) {
  if (count == 0) return {};
  const std::size_t need_s = count / 2;
  const std::size_t need_t = (count - 1) / 2;
  if (jf.s.size() < need_s || jf.t.size() < need_t) {
    throw InsufficientDepth(std::to_string(count) + " moments need " + std::to_string(need_s) + " s and " +
                            std::to_string(need_t) + " t coefficients");
  }
  auto s_at = [&](std::size_t k) { return k < jf.s.size() ? jf.s[k] : Poly{}; };
  auto t_at = [&](std::size_t k) { return k < jf.t.size() ? jf.t[k] : Poly{}; };

  // Level k first shows up at z^(2k); deeper levels cannot reach the window.
  const std::size_t deepest = (count - 1) / 2;
  PolySeries tail = PolySeries::one(count);
  for (std::size_t k = deepest + 1; k-- > 0;) {
    PolySeries den = PolySeries::one(count) - PolySeries::monomial(count, s_at(k), 1) - (t_at(k) * tail).shift_up(2);
    tail = PolySeries::one(count) / den;
  }
  return tail.coefficients();
}

JFraction jfraction_from_moments(const MomentFunctional& fn, int depth) {
  if (depth < 0) throw UsageError("depth must be nonnegative");
  const std::size_t needed = 2 * static_cast<std::size_t>(depth) + 2;
  if (fn.moments.size() < needed) {
    throw InsufficientMoments("depth " + std::to_string(depth) + " needs " + std::to_string(needed) + " moments, got " +
                              std::to_string(fn.moments.size()));
  }
  auto divide = [](const Poly& num, const Poly& den, const std::string& what, int level) {
    auto q = try_exact_div(num, den);
    if (!q) {
      throw NotDivisible("level " + std::to_string(level) + ": " + what + " = (" + to_string(num) + ")/(" +
                         to_string(den) + ") is not a polynomial");
    }
    return *q;
  };

  JFraction jf;
  ZPoly prev;
  ZPoly p = ZPoly::constant(Poly(1));
  Poly norm = functional_apply(fn, p * p);
  for (int k = 0; k <= depth; ++k) {
    if (norm.is_zero()) throw Breakdown(k, "F(p_" + std::to_string(k) + "^2) = 0");
    const ZPoly square = p * p;
    jf.s.push_back(divide(functional_apply(fn, square.times_z()), norm, "s_" + std::to_string(k), k));
    if (k == depth) break;
    ZPoly next = p.times_z() - jf.s.back() * p;
    if (k > 0) next = next - jf.t.back() * prev;
    const Poly next_norm = functional_apply(fn, next * next);
    jf.t.push_back(divide(next_norm, norm, "t_" + std::to_string(k), k));
    prev = std::move(p);
    p = std::move(next);
    norm = next_norm;
  }
  return jf;
}

std::string to_string(JFamily f) {
  switch (f) {
    case JFamily::narayana: return "narayana";
    case JFamily::cstar_shift1: return "cstar_shift1";
    case JFamily::cstar_shift0: return "cstar_shift0";
    case JFamily::motzkin: return "motzkin";
  }
  return "?";
}

JFraction closed_jfraction(JFamily family, int depth, const Poly& a, const Poly& b) {
  if (depth < 0) throw UsageError("depth must be nonnegative");
  auto qp = [](int e) { return Poly::q_pow(static_cast<std::uint32_t>(e)); };
  JFraction jf;
  for (int k = 0; k < depth; ++k) {
    switch (family) {
      case JFamily::narayana:
        if (k == 0) {
          jf.s.push_back(a + b);
          jf.t.push_back(qp(1) * (a + b) * b);
        } else {
          jf.s.push_back(qp(k) * (a + qp(k - 1) * b + qp(k) * b));
          jf.t.push_back(qp(3 * k + 1) * b * (qp(k) * b + a));
        }
        break;
      case JFamily::cstar_shift1:
        jf.s.push_back(qp(k) * (a + b));
        jf.t.push_back(qp(2 * k + 1) * a * b);
        break;
      case JFamily::cstar_shift0:
        jf.s.push_back(k == 0 ? a : qp(k - 1) * b + qp(k) * a);
        jf.t.push_back(qp(2 * k) * a * b);
        break;
      case JFamily::motzkin:
        jf.s.push_back(qp(k));
        jf.t.push_back(qp(2 * k + 1));
        break;
    }
  }
  return jf;
}

ZPoly orthopoly(const JFraction& jf, int n) {
  if (n < 0) throw UsageError("orthogonal polynomial degree must be nonnegative");
  if (jf.s.size() < static_cast<std::size_t>(n) || (n >= 2 && jf.t.size() < static_cast<std::size_t>(n - 1))) {
    throw InsufficientDepth("p_" + std::to_string(n) + " needs s_0..s_" + std::to_string(n - 1) + " and t_0..t_" +
                            std::to_string(n - 2));
  }
  ZPoly prev;
  ZPoly p = ZPoly::constant(Poly(1));
  for (int k = 1; k <= n; ++k) {
    ZPoly next = p.times_z() - jf.s[static_cast<std::size_t>(k - 1)] * p;
    if (k >= 2) next = next - jf.t[static_cast<std::size_t>(k - 2)] * prev;
    prev = std::move(p);
    p = std::move(next);
  }
  return p;
}

std::string to_string(ExplicitFamily f) {
  switch (f) {
    case ExplicitFamily::narayana_ab: return "narayana_ab";
    case ExplicitFamily::narayana_01: return "narayana_01";
    case ExplicitFamily::cstar_shift1: return "cstar_shift1";
    case ExplicitFamily::cstar_shift0: return "cstar_shift0";
  }
  return "?";
}

Poly boundary_qbinom(int m, int r) {
  if (m >= 0) return qbinom(m, r);
  if (m == -1 && (r == 0 || r == -1)) return Poly(1);
  return Poly{};
}

namespace {

std::uint32_t binom2(int k) {
  return k <= 1 ? 0U : static_cast<std::uint32_t>(k * (k - 1) / 2);
}

}  // namespace

ZPoly orthopoly_explicit(ExplicitFamily family, int n) {
  if (n < 0) throw UsageError("orthogonal polynomial degree must be nonnegative");
  const Poly a = Poly::var(Var::a);
  const Poly b = Poly::var(Var::b);
  std::vector<Poly> coeffs(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    Poly inner;
    if (family == ExplicitFamily::narayana_01) {
      inner = qbinom(n + k, 2 * k);
    } else {
      for (int j = k; j <= n; ++j) {
        switch (family) {
          case ExplicitFamily::narayana_ab:
            inner += Poly::q_pow(binom2(n + 1) - binom2(n + k + 1 - j)) * boundary_qbinom(n + k - j, k) *
                     boundary_qbinom(j - 1, k - 1) * b.pow(static_cast<std::uint32_t>(j - k)) * qrising(a, b, n - j);
            break;
          case ExplicitFamily::cstar_shift1:
            inner += boundary_qbinom(n + k - j, k) * boundary_qbinom(j, k) * a.pow(static_cast<std::uint32_t>(j - k)) *
                     b.pow(static_cast<std::uint32_t>(n - j));
            break;
          case ExplicitFamily::cstar_shift0:
            inner += boundary_qbinom(n + k - j, k) * boundary_qbinom(j - 1, j - k) *
                     b.pow(static_cast<std::uint32_t>(j - k)) * a.pow(static_cast<std::uint32_t>(n - j));
            break;
          case ExplicitFamily::narayana_01: break;
        }
      }
    }
    Poly term = Poly::q_pow(binom2(n - k)) * inner;
    coeffs[static_cast<std::size_t>(k)] = (n - k) % 2 == 0 ? term : -term;
  }
  return ZPoly(std::move(coeffs));
}

Poly functional_apply(const MomentFunctional& fn, const ZPoly& p) {
  if (p.degree() >= static_cast<long>(fn.moments.size())) {
    throw InsufficientMoments("polynomial of degree " + std::to_string(p.degree()) + " needs more than " +
                              std::to_string(fn.moments.size()) + " moments");
  }
  Poly r;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) r += p.coeffs()[k] * fn.moments[k];
  return r;
}

}  // namespace qcat
