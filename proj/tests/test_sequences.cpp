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

#include <thread>

#include "oracles.hpp"
#include "qcat/sequences.hpp"

using namespace qcat;
using namespace qcat::sequences;

namespace {

const Poly q = Poly::var(Var::q);
const Poly a = Poly::var(Var::a);
const Poly b = Poly::var(Var::b);

Poly at(const Poly& p, std::initializer_list<std::pair<Var, Poly>> images) {
  Bindings bind;
  for (const auto& [v, x] : images) bind.set(v, x);
  return substitute(p, bind);
}

}  // namespace

TEST_CASE("q-Catalan recurrence matches Dyck path areas") {
  CHECK(to_string(qcatalan(4)) == "1 + 3*q + 3*q^2 + 3*q^3 + 2*q^4 + q^5 + q^6");
  for (int n = 0; n <= 8; ++n) CHECK(qcatalan(n) == oracle::qcatalan_dyck(n));
}

TEST_CASE("q-Narayana polynomials") {
  CHECK(qnarayana_poly(0) == Poly(1));
  CHECK(qnarayana_poly(1) == a + b);
  CHECK(qnarayana_poly(2) == a * a + (2 + q) * a * b + (1 + q) * b * b);
  for (int n = 0; n <= 7; ++n) {
    CHECK(at(qnarayana_poly(n), {{Var::a, Poly(0)}, {Var::b, Poly(1)}}) == qcatalan(n));
    CHECK(at(qnarayana_poly(n), {{Var::q, Poly(0)}}) == (a + b).pow(static_cast<std::uint32_t>(n)));
  }
}

TEST_CASE("Narayana triangle in the q-rising basis") {
  const Triangle t = narayana_triangle(6);
  CHECK(to_string(t.at(5, 2)) == "4 + 6*q + q^2 - q^3");
  CHECK(to_string(t.at(5, 3)) == "6 + 8*q + 5*q^2 + q^3");
  CHECK(to_string(t.at(3, 2)) == "2 + q");
  for (int n = 0; n <= 6; ++n) {
    Poly sum;
    for (int k = 0; k <= n; ++k) {
      sum += t.at(static_cast<std::size_t>(n), static_cast<std::size_t>(k)) * qrising(a, b, k) *
             b.pow(static_cast<std::uint32_t>(n - k));
      if (n >= 1) {
        const Integer nk = oracle::binom(n, k) * oracle::binom(n, k - 1) / n;
        CHECK(at(t.at(static_cast<std::size_t>(n), static_cast<std::size_t>(k)), {{Var::q, Poly(1)}}) == Poly(nk));
        CHECK(narayana_number(n, k) == nk);
      }
    }
    CHECK(sum == qnarayana_poly(n));
  }
}

TEST_CASE("C* and N*") {
  CHECK(cstar(0) == Poly(1));
  CHECK(cstar(3) == a * b * b + (2 + q) * a * a * b + a.pow(3));
  const Triangle t = nstar_triangle(6);
  CHECK(to_string(t.at(4, 2)) == "3 + 2*q + q^2");
  CHECK(to_string(t.at(5, 3)) == "6 + 6*q + 5*q^2 + 2*q^3 + q^4");
  for (int n = 1; n <= 6; ++n) {
    for (int k = 1; k <= n; ++k) {
      CHECK(at(t.at(static_cast<std::size_t>(n), static_cast<std::size_t>(k)), {{Var::q, Poly(0)}}) ==
            Poly(oracle::binom(n - 1, k - 1)));
    }
  }
}

TEST_CASE("q-Motzkin numbers") {
  CHECK(to_string(qmotzkin(4)) == "1 + 3*q + 3*q^2 + q^3 + q^4");
  for (int n = 0; n <= 8; ++n) {
    // M_n(1) are the Motzkin numbers: sum_k binom(n, 2k) Catalan(k).
    Integer m = 0;
    for (int k = 0; 2 * k <= n; ++k) m += oracle::binom(n, 2 * k) * oracle::binom(2 * k, k) / (k + 1);
    CHECK(at(qmotzkin(n), {{Var::q, Poly(1)}}) == Poly(m));
  }
}

TEST_CASE("Rogers-Szego polynomials") {
  for (int n = 0; n <= 7; ++n) {
    Poly def;
    for (int k = 0; k <= n; ++k) {
      def +=
          oracle::qbinom_words(n, k) * a.pow(static_cast<std::uint32_t>(k)) * b.pow(static_cast<std::uint32_t>(n - k));
    }
    CHECK(rogers_szego(n) == def);
  }
}

TEST_CASE("q-Gould polynomials") {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k <= 6; ++k) {
      CHECK(gould(k, n, 1) == oracle::qbinom_words(n + k - 1, k));
      for (int r = 0; r <= 3; ++r) {
        const Integer want = oracle::binom(n + r * k, k) * n / (n + r * k);
        CHECK(at(gould(k, n, r), {{Var::q, Poly(1)}}) == Poly(want));
      }
    }
  }
  CHECK(gould(0, 0, 2) == Poly(1));
  CHECK(gould(3, 0, 2).is_zero());
}

TEST_CASE("memo tables give identical values under concurrent access") {
  std::vector<Poly> results(8);
  std::vector<std::thread> threads;
  for (int i = 0; i < 8; ++i) {
    threads.emplace_back(
        [&results, i] { results[static_cast<std::size_t>(i)] = cstar(12 - i % 3) + gould(4, 5, i % 4); });
  }
  for (auto& th : threads) th.join();
  for (int i = 0; i < 8; ++i) CHECK(results[static_cast<std::size_t>(i)] == cstar(12 - i % 3) + gould(4, 5, i % 4));
}
