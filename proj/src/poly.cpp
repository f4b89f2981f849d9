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

#include "qcat/poly.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <sstream>

#include "qcat/errors.hpp"
#include "qcat/kernels.hpp"

namespace qcat {

char var_name(Var v) {
  switch (v) {
    case Var::q: return 'q';
    case Var::a: return 'a';
    case Var::b: return 'b';
    case Var::u: return 'u';
  }
  return '?';
}

std::uint64_t Monomial::total_degree() const {
  std::uint64_t d = 0;
  for (auto e : exp) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exp.begin(), exp.end(), [](std::uint32_t e) { return e == 0; });
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    std::uint64_t s = std::uint64_t{exp[i]} + other.exp[i];
    if (s > std::numeric_limits<std::uint32_t>::max()) {
      throw ExponentOverflow("monomial exponent exceeds 32 bits");
    }
    r.exp[i] = static_cast<std::uint32_t>(s);
  }
  return r;
}

std::optional<Monomial> Monomial::divide(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (exp[i] < other.exp[i]) return std::nullopt;
    r.exp[i] = exp[i] - other.exp[i];
  }
  return r;
}

bool monomial_less(const Monomial& x, const Monomial& y) {
  auto dx = x.total_degree(), dy = y.total_degree();
  if (dx != dy) return dx < dy;
  for (std::size_t i = kNumVars; i-- > 0;) {
    if (x.exp[i] != y.exp[i]) return x.exp[i] < y.exp[i];
  }
  return false;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (auto e : m.exp) {
    h ^= e;
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

// ---------------------------------------------------------------------------

Poly::Poly(long c) {
  if (c != 0) terms_.emplace_back(Monomial{}, Integer(c));
}

Poly::Poly(const Integer& c) {
  if (c != 0) terms_.emplace_back(Monomial{}, c);
}

Poly Poly::var(Var v, std::uint32_t power) {
  return term(Integer(1), Monomial::power(v, power));
}

Poly Poly::term(const Integer& c, const Monomial& m) {
  Poly p;
  if (c != 0) p.terms_.emplace_back(m, c);
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return monomial_less(x.first, y.first); });
  Poly p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second == 0) p.terms_.pop_back();
    } else if (t.second != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
}

bool Poly::is_one() const {
  return terms_.size() == 1 && terms_[0].first.is_one() && terms_[0].second == 1;
}

Integer Poly::constant_term() const {
  if (!terms_.empty() && terms_.front().first.is_one()) return terms_.front().second;
  return Integer(0);
}

Integer Poly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return monomial_less(t.first, key); });
  if (it != terms_.end() && it->first == m) return it->second;
  return Integer(0);
}

std::uint32_t Poly::degree(Var v) const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[v]);
  return d;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

namespace {

template <bool Subtract>
std::vector<Poly::Term> merge_terms(const std::vector<Poly::Term>& x, std::span<const Poly::Term> y) {
  std::vector<Poly::Term> out;
  out.reserve(x.size() + y.size());
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() || j != y.end()) {
    if (j == y.end() || (i != x.end() && monomial_less(i->first, j->first))) {
      out.push_back(*i++);
    } else if (i == x.end() || monomial_less(j->first, i->first)) {
      out.emplace_back(j->first, Subtract ? Integer(-j->second) : j->second);
      ++j;
    } else {
      Integer c = Subtract ? Integer(i->second - j->second) : Integer(i->second + j->second);
      if (c != 0) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.terms_.empty()) return *this;
  terms_ = merge_terms<false>(terms_, rhs.terms_);
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.terms_.empty()) return *this;
  terms_ = merge_terms<true>(terms_, rhs.terms_);
  return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
  *this = *this * rhs;
  return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  return kernels::multiply(lhs, rhs);
}

bool Poly::operator==(const Poly& rhs) const {
  return terms_ == rhs.terms_;
}

Poly Poly::mul_monomial(const Integer& c, const Monomial& m) const {
  Poly r;
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the order.
  for (const auto& [tm, tc] : terms_) r.terms_.emplace_back(tm * m, tc * c);
  return r;
}

Poly Poly::pow(std::uint32_t e) const {
  Poly result(1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

std::vector<Poly> Poly::coefficients_in(Var v) const {
  std::vector<std::vector<Term>> buckets(degree(v) + 1);
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    rest[v] = 0;
    buckets[m[v]].emplace_back(rest, c);
  }
  std::vector<Poly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(Poly::from_terms(std::move(b)));
  return out;
}

// ---------------------------------------------------------------------------

std::optional<Poly> try_exact_div(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw DivByZero("polynomial division by zero");
  if (num.is_zero()) return Poly{};
  if (den.is_one()) return num;

  if (den.size() == 1) {
    const auto& [dm, dc] = den.leading_term();
    std::vector<Poly::Term> q;
    q.reserve(num.size());
    for (const auto& [m, c] : num.terms()) {
      auto qm = m.divide(dm);
      if (!qm || !mpz_divisible_p(c.get_mpz_t(), dc.get_mpz_t())) return std::nullopt;
      q.emplace_back(*qm, Integer(c / dc));
    }
    return Poly::from_terms(std::move(q));
  }

  // Leading-term division in the graded order; the remainder's leading
  // monomial strictly decreases, so the loop terminates.
  auto greater = [](const Monomial& x, const Monomial& y) { return monomial_less(y, x); };
  std::map<Monomial, Integer, decltype(greater)> rem(greater);
  for (const auto& [m, c] : num.terms()) rem.emplace(m, c);

  const auto& [lead_m, lead_c] = den.leading_term();
  std::vector<Poly::Term> quotient;
  while (!rem.empty()) {
    auto top = rem.begin();
    auto qm = top->first.divide(lead_m);
    if (!qm || !mpz_divisible_p(top->second.get_mpz_t(), lead_c.get_mpz_t())) return std::nullopt;
    Integer qc = top->second / lead_c;
    for (const auto& [m, c] : den.terms()) {
      Monomial pm = m * *qm;
      auto [it, inserted] = rem.try_emplace(pm);
      mpz_submul(it->second.get_mpz_t(), c.get_mpz_t(), qc.get_mpz_t());
      if (it->second == 0) rem.erase(it);
    }
    quotient.emplace_back(*qm, std::move(qc));
  }
  return Poly::from_terms(std::move(quotient));
}

Poly exact_div(const Poly& num, const Poly& den) {
  auto q = try_exact_div(num, den);
  if (!q) throw NotDivisible("(" + to_string(num) + ") is not divisible by (" + to_string(den) + ")");
  return *q;
}

std::optional<Poly> try_div_one_minus_q_pow(const Poly& p, std::uint32_t i) {
  if (i == 0) throw DivByZero("division by 1 - q^0");
  if (p.is_zero()) return Poly{};
  // Each (a, b, u)-monomial slice is a univariate polynomial in q; solve
  // s_j - s_{j-i} = c_j upward and require the top i entries of s to vanish.
  std::map<Monomial, std::vector<Integer>, decltype(&monomial_less)> slices(&monomial_less);
  for (const auto& [m, c] : p.terms()) {
    Monomial rest = m;
    rest[Var::q] = 0;
    auto& dense = slices[rest];
    if (dense.size() <= m[Var::q]) dense.resize(m[Var::q] + 1);
    dense[m[Var::q]] = c;
  }
  std::vector<Poly::Term> out;
  for (auto& [rest, c] : slices) {
    const std::size_t d = c.size() - 1;
    if (d < i) return std::nullopt;
    std::vector<Integer> s(d + 1);
    for (std::size_t j = 0; j <= d; ++j) {
      s[j] = c[j];
      if (j >= i) s[j] += s[j - i];
    }
    for (std::size_t j = d - i + 1; j <= d; ++j) {
      if (s[j] != 0) return std::nullopt;
    }
    for (std::size_t j = 0; j + i <= d; ++j) {
      if (s[j] == 0) continue;
      Monomial m = rest;
      m[Var::q] = static_cast<std::uint32_t>(j);
      out.emplace_back(m, std::move(s[j]));
    }
  }
  return Poly::from_terms(std::move(out));
}

// ---------------------------------------------------------------------------

Bindings& Bindings::set(Var v, Poly image) {
  images_[static_cast<std::size_t>(v)] = std::move(image);
  return *this;
}

Poly substitute(const Poly& p, const Bindings& bindings) {
  // Powers of each bound image, built lazily.
  std::array<std::vector<Poly>, kNumVars> powers;
  auto power_of = [&](std::size_t v, std::uint32_t e) -> const Poly& {
    auto& cache = powers[v];
    if (cache.empty()) cache.emplace_back(1);
    while (cache.size() <= e) cache.push_back(cache.back() * *bindings[static_cast<Var>(v)]);
    return cache[e];
  };

  std::vector<Poly::Term> collected;
  for (const auto& [m, c] : p.terms()) {
    Monomial kept;
    Poly factor(c);
    bool expanded = false;
    for (std::size_t v = 0; v < kNumVars; ++v) {
      if (m.exp[v] == 0) continue;
      if (bindings.binds(static_cast<Var>(v))) {
        factor *= power_of(v, m.exp[v]);
        expanded = true;
      } else {
        kept.exp[v] = m.exp[v];
      }
    }
    if (!expanded) {
      collected.emplace_back(m, c);
      continue;
    }
    for (const auto& [fm, fc] : factor.terms()) collected.emplace_back(fm * kept, fc);
  }
  return Poly::from_terms(std::move(collected));
}

Poly qbinom(int n, int k) {
  if (n < 0 || k < 0 || k > n) return Poly{};
  k = std::min(k, n - k);
  // Row-by-row q-Pascal: [m j] = [m-1 j-1] + q^j [m-1 j].
  std::vector<Poly> row(static_cast<std::size_t>(k) + 1);
  row[0] = Poly(1);
  for (int m = 1; m <= n; ++m) {
    for (int j = std::min(m, k); j >= 1; --j) {
      row[j] = row[j - 1] + row[j].mul_monomial(Integer(1), Monomial::power(Var::q, static_cast<std::uint32_t>(j)));
    }
  }
  return row[k];
}

Poly qrising(const Poly& x, const Poly& y, int k) {
  Poly result(1);
  for (int i = 0; i < k; ++i) result *= x + y * Poly::q_pow(static_cast<std::uint32_t>(i));
  return result;
}

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return Integer(0);
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// ---------------------------------------------------------------------------

namespace {

void append_monomial(std::string& out, const Monomial& m) {
  bool first = true;
  for (std::size_t v = 0; v < kNumVars; ++v) {
    if (m.exp[v] == 0) continue;
    if (!first) out += '*';
    first = false;
    out += var_name(static_cast<Var>(v));
    if (m.exp[v] > 1) {
      out += '^';
      out += std::to_string(m.exp[v]);
    }
  }
}

}  // namespace

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    Integer mag = abs(c);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += mag.get_str();
    } else {
      if (mag != 1) {
        out += mag.get_str();
        out += '*';
      }
      append_monomial(out, m);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
  return os << to_string(p);
}

}  // namespace qcat
