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

#include "qcat/kernels.hpp"

#include <exception>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qcat/errors.hpp"

namespace qcat::kernels {

namespace {

using Accumulator = std::unordered_map<Monomial, Integer, MonomialHash>;

void accumulate(Accumulator& acc, std::span<const Poly::Term> lhs, std::span<const Poly::Term> rhs) {
  for (const auto& [lm, lc] : lhs) {
    for (const auto& [rm, rc] : rhs) {
      auto [it, inserted] = acc.try_emplace(lm * rm);
      mpz_addmul(it->second.get_mpz_t(), lc.get_mpz_t(), rc.get_mpz_t());
    }
  }
}

std::vector<Poly::Term> drain(Accumulator& acc) {
  std::vector<Poly::Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) out.emplace_back(m, std::move(c));
  }
  return out;
}

bool in_parallel() {
#ifdef _OPENMP
  return omp_in_parallel() != 0;
#else
  return true;
#endif
}

}  // namespace

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

Poly multiply_serial(const Poly& lhs, const Poly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return Poly{};
  if (lhs.size() == 1) return rhs.mul_monomial(lhs.leading_term().second, lhs.leading_term().first);
  if (rhs.size() == 1) return lhs.mul_monomial(rhs.leading_term().second, rhs.leading_term().first);
  Accumulator acc;
  acc.reserve(lhs.size() + rhs.size());
  accumulate(acc, lhs.terms(), rhs.terms());
  return Poly::from_terms(drain(acc));
}

Poly multiply(const Poly& lhs, const Poly& rhs) {
  if (lhs.size() * rhs.size() < kParallelMultiplyThreshold || max_threads() == 1 || in_parallel()) {
    return multiply_serial(lhs, rhs);
  }
  const auto& outer = lhs.size() >= rhs.size() ? lhs : rhs;
  const auto& inner = lhs.size() >= rhs.size() ? rhs : lhs;
  const auto outer_terms = outer.terms();
  const auto chunks = static_cast<std::ptrdiff_t>(max_threads());
  const auto n = static_cast<std::ptrdiff_t>(outer_terms.size());
  std::vector<std::vector<Poly::Term>> partial(static_cast<std::size_t>(chunks));
  std::exception_ptr failure;

#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t chunk = 0; chunk < chunks; ++chunk) {
    try {
      const auto begin = n * chunk / chunks;
      const auto end = n * (chunk + 1) / chunks;
      Accumulator acc;
      accumulate(acc, outer_terms.subspan(static_cast<std::size_t>(begin), static_cast<std::size_t>(end - begin)),
                 inner.terms());
      partial[static_cast<std::size_t>(chunk)] = drain(acc);
    } catch (...) {
#pragma omp critical(qcat_multiply_failure)
      failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<Poly::Term> all;
  for (auto& part : partial) {
    all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return Poly::from_terms(std::move(all));
}

namespace {

void require_square(const Matrix& m) {
  for (const auto& row : m) {
    if (row.size() != m.size()) throw UsageError("determinant of a non-square matrix");
  }
}

/// Moves a nonzero pivot into row k. Returns false if column k is zero below k.
bool pivot(Matrix& m, std::size_t k, int& sign) {
  if (!m[k][k].is_zero()) return true;
  for (std::size_t r = k + 1; r < m.size(); ++r) {
    if (!m[r][k].is_zero()) {
      std::swap(m[r], m[k]);
      sign = -sign;
      return true;
    }
  }
  return false;
}

}  // namespace

Poly bareiss_determinant_serial(Matrix m) {
  require_square(m);
  const std::size_t n = m.size();
  if (n == 0) return Poly(1);
  int sign = 1;
  Poly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (!pivot(m, k, sign)) return Poly{};
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      }
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

Poly bareiss_determinant(Matrix m) {
  require_square(m);
  const std::size_t n = m.size();
  if (n == 0) return Poly(1);
  int sign = 1;
  Poly prev(1);
  std::exception_ptr failure;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (!pivot(m, k, sign)) return Poly{};
    const auto width = static_cast<std::ptrdiff_t>(n - k - 1);
    // Step k reads row k and column k only, writes the trailing block.
#pragma omp parallel for collapse(2) schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < width; ++i) {
      for (std::ptrdiff_t j = 0; j < width; ++j) {
        const auto r = k + 1 + static_cast<std::size_t>(i);
        const auto c = k + 1 + static_cast<std::size_t>(j);
        try {
          m[r][c] = exact_div(m[k][k] * m[r][c] - m[r][k] * m[k][c], prev);
        } catch (...) {
#pragma omp critical(qcat_bareiss_failure)
          failure = std::current_exception();
        }
      }
    }
    if (failure) std::rethrow_exception(failure);
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace qcat::kernels
