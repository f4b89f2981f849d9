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
#include "qcat/errors.hpp"
#include "qcat/qfrac.hpp"

using namespace qcat;

namespace {

const Poly q = Poly::var(Var::q);
const Poly a = Poly::var(Var::a);

}  // namespace

TEST_CASE("normalization strips dividing factors") {
  const QFrac x(1 - q.pow(4), QDenominator{{2, 1}});
  CHECK(x.is_polynomial());
  CHECK(x.to_poly() == 1 + q * q);
  const QFrac y(1 + q, QDenominator{{1, 1}, {2, 1}});
  CHECK_FALSE(y.is_polynomial());
  CHECK_THROWS_AS((void)y.to_poly(), DenominatorResidue);
  CHECK(expand(QDenominator{{1, 2}}) == (1 - q) * (1 - q));
}

TEST_CASE("field-like arithmetic") {
  const QFrac inv1 = QFrac::inverse_qpochhammer(1);
  const QFrac inv2 = QFrac::inverse_qpochhammer(2);
  CHECK(inv2 * QFrac(Poly(1 - q.pow(2))) == inv1);
  CHECK((inv1 * QFrac(1 - q)).is_one());
  CHECK(inv1 + inv1 == QFrac(Poly(2)) * inv1);
  CHECK((inv2 - inv2).is_zero());
  // 1/(1-q) - q/(1-q) = 1
  CHECK(inv1 - QFrac(q) * inv1 == QFrac(1));
}

TEST_CASE("equivalent representations compare equal") {
  std::mt19937 rng(23);
  for (int i = 0; i < 30; ++i) {
    const Poly p = oracle::random_poly(rng);
    const QFrac x(p, QDenominator{{1, 1}});
    const QFrac y(p * (1 - q.pow(3)), QDenominator{{1, 1}, {3, 1}});
    CHECK(x == y);
    CHECK(QFrac::sum({x, y, -x}) == x);
  }
}

TEST_CASE("substitution maps q to a power") {
  const QFrac x(a, QDenominator{{1, 1}});
  Bindings b;
  b.set(Var::q, q * q).set(Var::a, Poly(1));
  const QFrac y = x.substitute(b);
  CHECK(y == QFrac(Poly(1), QDenominator{{2, 1}}));
  Bindings bad;
  bad.set(Var::q, 1 + q);
  CHECK_THROWS_AS((void)x.substitute(bad), UsageError);
}
