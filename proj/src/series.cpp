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

#include "qcat/series.hpp"

#include <functional>

namespace qcat {

namespace {

std::uint32_t binom2(std::uint32_t k) {
  return k * (k - (k > 0 ? 1 : 0)) / 2;
}

/// sum_j [k j] a^j b^(k-j), straight from the definition.
Poly rogers_szego_by_definition(const Poly& a, const Poly& b, int k) {
  std::vector<Poly> a_pow{Poly(1)}, b_pow{Poly(1)};
  for (int j = 1; j <= k; ++j) {
    a_pow.push_back(a_pow.back() * a);
    b_pow.push_back(b_pow.back() * b);
  }
  Poly r;
  for (int j = 0; j <= k; ++j) r += qbinom(k, j) * a_pow[j] * b_pow[k - j];
  return r;
}

Series exponential_type(std::size_t order, const std::function<Poly(std::uint32_t)>& numerator) {
  Series s(order);
  for (std::uint32_t k = 0; k < order; ++k) {
    Poly num = numerator(k);
    if (k % 2 == 1) num = -num;
    QDenominator den;
    for (std::uint32_t i = 1; i <= k; ++i) den[i] = 1;
    s[k] = QFrac(std::move(num), std::move(den));
  }
  return s;
}

}  // namespace

PolySeries to_poly_series(const Series& s) {
  PolySeries p(s.order());
  for (std::size_t k = 0; k < s.order(); ++k) p[k] = s[k].to_poly();
  return p;
}

Series to_series(const PolySeries& s) {
  Series r(s.order());
  for (std::size_t k = 0; k < s.order(); ++k) r[k] = QFrac(s[k]);
  return r;
}

Series build_Er(int r, std::size_t order) {
  if (r < 0) throw UsageError("E_r needs r >= 0");
  Series s(order);
  for (std::uint32_t k = 0; k < order; ++k) {
    s[k] = QFrac::inverse_qpochhammer(k).times_q_pow(static_cast<std::uint32_t>(r) * binom2(k));
  }
  return s;
}

PolySeries build_Gr(int r, int n, std::size_t order) {
  if (n < 0) throw UsageError("G_r(z, n) needs n >= 0");
  Series base = build_Er(r, order).negate_z();
  return to_poly_series(base.scale_z(static_cast<std::uint32_t>(n)) / base);
}

Series build_h(const Poly& a, const Poly& b, std::size_t order) {
  Poly rising(1);
  std::uint32_t built = 0;
  return exponential_type(order, [&](std::uint32_t k) {
    // Successive calls ask for k = 0, 1, 2, ...
    while (built < k) {
      rising *= a + b * Poly::q_pow(built);
      ++built;
    }
    return rising.mul_monomial(Integer(1), Monomial::power(Var::q, binom2(k)));
  });
}

Series build_hstar(const Poly& a, const Poly& b, std::size_t order) {
  return exponential_type(order, [&](std::uint32_t k) {
    return rogers_szego_by_definition(a, b, static_cast<int>(k))
        .mul_monomial(Integer(1), Monomial::power(Var::q, binom2(k)));
  });
}

std::string to_string(RatioKind kind) {
  switch (kind) {
    case RatioKind::f_catalan: return "f_catalan";
    case RatioKind::f_narayana: return "f_narayana";
    case RatioKind::f_star: return "f_star";
    case RatioKind::F: return "F";
    case RatioKind::g: return "g";
  }
  return "?";
}

PolySeries build_ratio_series(RatioKind kind, const Poly& a, const Poly& b, std::size_t order) {
  switch (kind) {
    case RatioKind::f_catalan: {
      Series e2 = build_Er(2, order).negate_z();
      return to_poly_series(e2.scale_z(1) / e2);
    }
    case RatioKind::f_narayana: {
      Series h = build_h(a, b, order);
      return to_poly_series(h.scale_z(1) / h);
    }
    case RatioKind::f_star: {
      Series h = build_hstar(a, b, order);
      return to_poly_series(h.scale_z(1) / h);
    }
    case RatioKind::F: {
      PolySeries fstar = build_ratio_series(RatioKind::f_star, a, b, order);
      return PolySeries::one(order) + (a * fstar).shift_up(1);
    }
    case RatioKind::g: {
      // f(qz) - 1 = (a+b) q z g(z): coefficient n of g is q^n f_{n+1} / (a+b).
      PolySeries f = build_ratio_series(RatioKind::f_narayana, a, b, order + 1);
      const Poly s = a + b;
      PolySeries g(order);
      for (std::size_t n = 0; n < order; ++n) {
        g[n] = exact_div(detail::times_q_pow(f[n + 1], static_cast<std::uint32_t>(n)), s);
      }
      return g;
    }
  }
  throw UsageError("unknown ratio series kind");
}

}  // namespace qcat
