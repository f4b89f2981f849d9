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

// Independent reference computations used only by the tests. None of them
// goes through the library's own algorithms for the quantity it checks.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "qcat/jfraction.hpp"
#include "qcat/poly.hpp"

namespace oracle {

using qcat::Integer;
using qcat::Poly;

/// Integer binomial from Pascal's rule.
inline Integer binom(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  std::vector<Integer> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<Integer> next(static_cast<std::size_t>(i) + 1, 1);
    for (int j = 1; j < i; ++j)
      next[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j - 1)] + row[static_cast<std::size_t>(j)];
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

/// Gaussian binomial as the inversion generating function of 0/1 words with k ones.
inline Poly qbinom_words(int n, int k) {
  if (k < 0 || k > n) return {};
  Poly r;
  std::vector<int> w(static_cast<std::size_t>(n), 0);
  std::fill(w.end() - k, w.end(), 1);
  do {
    std::uint32_t inv = 0;
    int ones = 0;
    for (int x : w) {
      if (x == 1) {
        ++ones;
      } else {
        inv += static_cast<std::uint32_t>(ones);
      }
    }
    r += Poly::q_pow(inv);
  } while (std::next_permutation(w.begin(), w.end()));
  return r;
}

/// Carlitz-Riordan q-Catalan number as the area generating function of Dyck
/// paths (sum of heights at which up steps start).
inline Poly qcatalan_dyck(int n) {
  Poly r;
  std::vector<int> steps(static_cast<std::size_t>(2 * n), 0);
  std::fill(steps.begin() + n, steps.end(), 1);  // 1 = up
  do {
    int h = 0;
    std::uint32_t area = 0;
    bool ok = true;
    for (int s : steps) {
      if (s == 1) {
        area += static_cast<std::uint32_t>(h);
        ++h;
      } else if (--h < 0) {
        ok = false;
        break;
      }
    }
    if (ok) r += Poly::q_pow(area);
  } while (std::next_permutation(steps.begin(), steps.end()));
  return r;
}

/// Determinant by the Leibniz permutation expansion.
inline Poly leibniz_det(const std::vector<std::vector<Poly>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Poly det;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    }
    Poly term(1);
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term *= m[i][perm[i]];
    det += inversions % 2 == 0 ? term : -term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

/// Moments of a J-fraction as weighted Motzkin path counts: level steps at
/// height h weigh s_h, a down step from h+1 to h weighs t_h.
inline std::vector<Poly> motzkin_path_moments(const qcat::JFraction& jf, std::size_t count) {
  std::vector<Poly> out;
  for (std::size_t len = 0; len < count; ++len) {
    std::vector<Poly> w(len + 2);
    w[0] = Poly(1);
    for (std::size_t step = 0; step < len; ++step) {
      std::vector<Poly> next(len + 2);
      for (std::size_t h = 0; h <= len; ++h) {
        if (w[h].is_zero()) continue;
        next[h + 1] += w[h];
        if (h < jf.s.size()) next[h] += w[h] * jf.s[h];
        if (h > 0 && h - 1 < jf.t.size()) next[h - 1] += w[h] * jf.t[h - 1];
      }
      w = std::move(next);
    }
    out.push_back(w[0]);
  }
  return out;
}

/// Random polynomial in q, a, b with small coefficients and exponents.
inline Poly random_poly(std::mt19937& rng, int terms = 5, int max_exp = 3) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> ex(0, max_exp);
  std::vector<Poly::Term> t;
  for (int i = 0; i < terms; ++i) {
    qcat::Monomial m;
    m[qcat::Var::q] = static_cast<std::uint32_t>(ex(rng));
    m[qcat::Var::a] = static_cast<std::uint32_t>(ex(rng));
    m[qcat::Var::b] = static_cast<std::uint32_t>(ex(rng));
    t.emplace_back(m, Integer(coeff(rng)));
  }
  return Poly::from_terms(std::move(t));
}

}  // namespace oracle
