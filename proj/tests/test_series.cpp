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

#include "oracles.hpp"
#include "qcat/errors.hpp"
#include "qcat/series.hpp"

using namespace qcat;

namespace {

const Poly q = Poly::var(Var::q);
const Poly a = Poly::var(Var::a);
const Poly b = Poly::var(Var::b);

Poly at(const Poly& p, Var v, const Poly& image) {
  Bindings bind;
  bind.set(v, image);
  return substitute(p, bind);
}

}  // namespace

TEST_CASE("series arithmetic") {
  const PolySeries one = PolySeries::one(6);
  const PolySeries z = PolySeries::monomial(6, Poly(1), 1);
  const PolySeries geom = one / (one - z);
  for (std::size_t k = 0; k < 6; ++k) CHECK(geom[k] == Poly(1));
  CHECK((geom * (one - z)) == one);
  CHECK(z.shift_up(2)[3] == Poly(1));
  CHECK(z.shift_down(1) == PolySeries::one(5));
  CHECK_THROWS_AS((void)one.shift_down(1), NotDivisible);
  CHECK_THROWS_AS((void)(one / (one + one)), NonUnitConstantTerm);
  CHECK(geom.scale_z(2)[3] == q.pow(6));
  CHECK(geom.negate_z()[3] == Poly(-1));
  CHECK_THROWS_AS(PolySeries(0), UsageError);
}

TEST_CASE("E_r satisfies its q-difference equation") {
  for (int r = 0; r <= 4; ++r) {
    const Series e = build_Er(r, 9);
    CHECK((e - e.scale_z(1)).first_difference(e.scale_z(static_cast<std::uint32_t>(r)).shift_up(1)) == -1);
  }
}

TEST_CASE("q-Catalan ratio matches Dyck path areas") {
  const PolySeries f = build_ratio_series(RatioKind::f_catalan, a, b, 9);
  for (int n = 0; n < 9; ++n) CHECK(f[static_cast<std::size_t>(n)] == oracle::qcatalan_dyck(n));
  CHECK(build_Gr(2, 1, 9) == f);
}

TEST_CASE("q-Narayana ratio at q = 1 and at (a,b) = (0,1)") {
  const PolySeries f = build_ratio_series(RatioKind::f_narayana, a, b, 8);
  for (int n = 1; n < 8; ++n) {
    Poly closed;
    for (int k = 1; k <= n; ++k) {
      const Integer nk = oracle::binom(n, k) * oracle::binom(n, k - 1) / n;
      closed += Poly(nk) * b.pow(static_cast<std::uint32_t>(n - k)) * (a + b).pow(static_cast<std::uint32_t>(k));
    }
    CHECK(at(f[static_cast<std::size_t>(n)], Var::q, Poly(1)) == closed);
    const Poly cat = at(at(f[static_cast<std::size_t>(n)], Var::a, Poly(0)), Var::b, Poly(1));
    CHECK(cat == oracle::qcatalan_dyck(n));
  }
}

TEST_CASE("f* and F agree at q = 1 with the Narayana expansion") {
  const PolySeries fs = build_ratio_series(RatioKind::f_star, a, b, 7);
  const PolySeries big_f = build_ratio_series(RatioKind::F, a, b, 7);
  CHECK(big_f[0] == Poly(1));
  for (int n = 1; n < 7; ++n) {
    Poly closed;
    for (int k = 1; k <= n; ++k) {
      closed += Poly(oracle::binom(n, k) * oracle::binom(n, k - 1) / n) * a.pow(static_cast<std::uint32_t>(k)) *
                b.pow(static_cast<std::uint32_t>(n - k));
    }
    CHECK(at(a * fs[static_cast<std::size_t>(n - 1)], Var::q, Poly(1)) == closed);
    CHECK(big_f[static_cast<std::size_t>(n)] == a * fs[static_cast<std::size_t>(n - 1)]);
  }
}

TEST_CASE("q-Gould series coefficients at r = 0") {
  for (int n = 0; n <= 5; ++n) {
    const PolySeries g = build_Gr(0, n, 7);
    for (int k = 0; k < 7; ++k) {
      const std::uint32_t e = static_cast<std::uint32_t>(k * (k - 1) / 2);
      CHECK(g[static_cast<std::size_t>(k)] == q.pow(e) * oracle::qbinom_words(n, k));
    }
  }
}

TEST_CASE("g series is determined by f") {
  const PolySeries f = build_ratio_series(RatioKind::f_narayana, a, b, 8);
  const PolySeries g = build_ratio_series(RatioKind::g, a, b, 7);
  for (int n = 0; n < 7; ++n) {
    CHECK(q.pow(static_cast<std::uint32_t>(n)) * f[static_cast<std::size_t>(n + 1)] ==
          (a + b) * g[static_cast<std::size_t>(n)]);
  }
}
