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

#include "qcat/sequences.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <tuple>

#include "qcat/errors.hpp"

namespace qcat::sequences {

namespace {

class MemoSequence {
 public:
  using Step = std::function<Poly(const std::vector<Poly>&, std::size_t)>;
  explicit MemoSequence(Step step) : step_(std::move(step)) {}

  Poly at(int n) {
    if (n < 0) throw UsageError("sequence index must be nonnegative");
    std::lock_guard lock(mutex_);
    while (values_.size() <= static_cast<std::size_t>(n)) values_.push_back(step_(values_, values_.size()));
    return values_[static_cast<std::size_t>(n)];
  }

 private:
  Step step_;
  std::mutex mutex_;
  std::vector<Poly> values_;
};

Poly times_q(const Poly& p, std::size_t e) {
  return p.mul_monomial(Integer(1), Monomial::power(Var::q, static_cast<std::uint32_t>(e)));
}

const Poly& var_a() {
  static const Poly a = Poly::var(Var::a);
  return a;
}

const Poly& var_b() {
  static const Poly b = Poly::var(Var::b);
  return b;
}

/// Row n holds the coefficients of first^k second^(n-k) of row_poly(n).
Triangle split_rows(int max_row, const std::function<Poly(int)>& row_poly, Var first, Var second) {
  if (max_row < 0) throw UsageError("triangle needs max_row >= 0");
  Triangle t;
  for (int n = 0; n <= max_row; ++n) {
    Poly p = row_poly(n);
    std::vector<Poly> row(static_cast<std::size_t>(n) + 1);
    std::vector<std::vector<Poly::Term>> buckets(row.size());
    for (const auto& [m, c] : p.terms()) {
      if (m[first] + m[second] != static_cast<std::uint32_t>(n) || m[first] > static_cast<std::uint32_t>(n)) {
        throw ArithmeticError("row " + std::to_string(n) + " is not homogeneous of degree n");
      }
      Monomial rest = m;
      rest[first] = 0;
      rest[second] = 0;
      buckets[m[first]].emplace_back(rest, c);
    }
    for (std::size_t k = 0; k < row.size(); ++k) row[k] = Poly::from_terms(std::move(buckets[k]));
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace

Poly qcatalan(int n) {
  static MemoSequence memo([](const std::vector<Poly>& c, std::size_t n) {
    if (n == 0) return Poly(1);
    Poly sum;
    for (std::size_t k = 0; k < n; ++k) sum += times_q(c[k] * c[n - k - 1], k);
    return sum;
  });
  return memo.at(n);
}

Poly qnarayana_poly(int n) {
  static MemoSequence memo([](const std::vector<Poly>& c, std::size_t n) {
    if (n == 0) return Poly(1);
    Poly sum;
    for (std::size_t k = 0; k < n; ++k) sum += times_q(c[k] * c[n - k - 1], k);
    return var_a() * c[n - 1] + var_b() * sum;
  });
  return memo.at(n);
}

Triangle narayana_triangle(int max_row) {
  if (max_row < 0) throw UsageError("triangle needs max_row >= 0");
  // Peel off the basis (a +. b)^k b^(n-k) from the top a-degree down; each
  // basis element is monic in a, so every step is exact.
  Triangle t;
  for (int n = 0; n <= max_row; ++n) {
    Poly rest = qnarayana_poly(n);
    std::vector<Poly> row(static_cast<std::size_t>(n) + 1);
    for (int k = n; k >= 0; --k) {
      std::vector<Poly::Term> picked;
      for (const auto& [m, c] : rest.terms()) {
        if (m[Var::a] != static_cast<std::uint32_t>(k)) continue;
        Monomial qpart;
        qpart[Var::q] = m[Var::q];
        picked.emplace_back(qpart, c);
      }
      Poly entry = Poly::from_terms(std::move(picked));
      rest -= entry * qrising(var_a(), var_b(), k) * var_b().pow(static_cast<std::uint32_t>(n - k));
      row[static_cast<std::size_t>(k)] = std::move(entry);
    }
    if (!rest.is_zero()) throw ArithmeticError("C_" + std::to_string(n) + " is not homogeneous in a, b");
    t.rows.push_back(std::move(row));
  }
  return t;
}

Poly cstar(int n) {
  static MemoSequence memo([](const std::vector<Poly>& c, std::size_t n) {
    if (n == 0) return Poly(1);
    Poly sum;
    for (std::size_t k = 0; k + 2 <= n; ++k) sum += times_q(c[k] * c[n - 1 - k], k);
    return var_a() * c[n - 1] + var_b() * sum;
  });
  return memo.at(n);
}

Triangle nstar_triangle(int max_row) {
  return split_rows(max_row, cstar, Var::a, Var::b);
}

Poly qmotzkin(int n) {
  static MemoSequence memo([](const std::vector<Poly>& m, std::size_t n) {
    if (n == 0) return Poly(1);
    Poly r = m[n - 1];
    if (n >= 2) {
      for (std::size_t j = 0; j <= n - 2; ++j) r += times_q(m[n - 2 - j] * m[j], j + 1);
    }
    return r;
  });
  return memo.at(n);
}

Poly rogers_szego(int n) {
  static MemoSequence memo([](const std::vector<Poly>& r, std::size_t n) {
    if (n == 0) return Poly(1);
    if (n == 1) return var_a() + var_b();
    return (var_a() + var_b()) * r[n - 1] +
           var_a() * var_b() * (Poly::q_pow(static_cast<std::uint32_t>(n - 1)) - Poly(1)) * r[n - 2];
  });
  return memo.at(n);
}

Poly gould(int k, int n, int r) {
  if (k < 0 || n < 0 || r < 0) throw UsageError("gould needs k, n, r >= 0");
  if (k == 0) return Poly(1);
  if (n == 0) return Poly{};

  // levels[j][m] = G(j, m, r); level j is needed up to m = n + (k - j) r.
  static std::mutex mutex;
  static std::map<int, std::vector<std::vector<Poly>>> tables;
  std::lock_guard lock(mutex);
  auto& levels = tables[r];
  for (int j = 0; j <= k; ++j) {
    const std::size_t needed = static_cast<std::size_t>(n + (k - j) * r) + 1;
    if (levels.size() <= static_cast<std::size_t>(j)) levels.emplace_back();
    auto& level = levels[static_cast<std::size_t>(j)];
    while (level.size() < needed) {
      const std::size_t m = level.size();
      if (j == 0) {
        level.emplace_back(1);
      } else if (m == 0) {
        level.emplace_back();
      } else {
        // G(j, m) = G(j, m-1) + q^(m-1) G(j-1, m-1+r).
        const auto& below = levels[static_cast<std::size_t>(j - 1)];
        level.push_back(level[m - 1] + times_q(below[m - 1 + static_cast<std::size_t>(r)], m - 1));
      }
    }
  }
  return levels[static_cast<std::size_t>(k)][static_cast<std::size_t>(n)];
}

Integer narayana_number(int n, int k) {
  if (n < 1 || k < 1 || k > n) return Integer(0);
  return Integer(binomial(n, k) * binomial(n, k - 1) / n);
}

}  // namespace qcat::sequences
