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

#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qcat/kernels.hpp"
#include "qcat/sequences.hpp"

using namespace qcat;

TEST_CASE("parallel multiply matches the serial kernel") {
  std::mt19937 rng(41);
  for (int i = 0; i < 10; ++i) {
    const Poly x = oracle::random_poly(rng, 200, 12);
    const Poly y = oracle::random_poly(rng, 200, 12);
    REQUIRE(x.size() * y.size() >= kernels::kParallelMultiplyThreshold);
    CHECK(kernels::multiply(x, y) == kernels::multiply_serial(x, y));
  }
  const Poly x = sequences::cstar(14);
  CHECK(kernels::multiply(x, x) == kernels::multiply_serial(x, x));
  CHECK(kernels::multiply(x, Poly()).is_zero());
}

TEST_CASE("parallel Bareiss matches the serial kernel and Leibniz") {
  std::mt19937 rng(43);
  for (int n = 1; n <= 5; ++n) {
    kernels::Matrix m(static_cast<std::size_t>(n));
    for (auto& row : m) {
      for (int j = 0; j < n; ++j) row.push_back(oracle::random_poly(rng, 3, 2));
    }
    const Poly want = oracle::leibniz_det(m);
    CHECK(kernels::bareiss_determinant(m) == want);
    CHECK(kernels::bareiss_determinant_serial(m) == want);
  }
}

TEST_CASE("pivoting handles zero leading entries and singular matrices") {
  const Poly q = Poly::var(Var::q);
  kernels::Matrix m = {{Poly(), Poly(1)}, {Poly(1), q}};
  CHECK(kernels::bareiss_determinant(m) == Poly(-1));
  CHECK(kernels::bareiss_determinant_serial(m) == Poly(-1));
  kernels::Matrix z = {{Poly(), Poly(1)}, {Poly(), q}};
  CHECK(kernels::bareiss_determinant(z).is_zero());
  kernels::Matrix s = {{q, q * q}, {Poly(1), q}};
  CHECK(kernels::bareiss_determinant(s).is_zero());
  CHECK(kernels::bareiss_determinant({}) == Poly(1));
}

TEST_CASE("thread count is positive") {
  CHECK(kernels::max_threads() >= 1);
}
