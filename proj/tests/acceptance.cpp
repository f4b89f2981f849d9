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

// Acceptance gate: one line per criterion, exact comparisons, wall-clock limits.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qcat/cli.hpp"
#include "qcat/errors.hpp"
#include "qcat/hankel.hpp"
#include "qcat/io.hpp"
#include "qcat/jfraction.hpp"
#include "qcat/sequences.hpp"
#include "qcat/series.hpp"
#include "qcat/verify.hpp"

using namespace qcat;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

void expect_eq(const Poly& got, const Poly& want, const std::string& what) {
  if (!(got == want)) throw Failure(what + ": got " + to_string(got) + ", want " + to_string(want));
}

void expect_check(const std::string& name, int depth, bool erratum_ok = false) {
  const auto r = verify::run_check(name, depth);
  const bool ok = r.outcome == verify::Outcome::passed || (erratum_ok && r.outcome == verify::Outcome::erratum);
  if (!ok)
    throw Failure(name + " at depth " + std::to_string(depth) + ": " + verify::to_string(r.outcome) + " " + r.detail);
}

Poly P(const char* text) {
  return parse_poly(text);
}

Poly sub(const Poly& p, std::initializer_list<std::pair<Var, Poly>> images) {
  Bindings b;
  for (const auto& [v, x] : images) b.set(v, x);
  return substitute(p, b);
}

const Poly a = Poly::var(Var::a);
const Poly b = Poly::var(Var::b);
const Poly q = Poly::var(Var::q);

void golden() {
  const char* cat[] = {"1", "1", "1+q", "1+2*q+q^2+q^3", "1+3*q+3*q^2+3*q^3+2*q^4+q^5+q^6"};
  for (int n = 0; n <= 4; ++n) expect_eq(sequences::qcatalan(n), P(cat[n]), "C_" + std::to_string(n));
  const char* mot[] = {"1", "1", "1+q", "1+2*q+q^2", "1+3*q+3*q^2+q^3+q^4"};
  for (int n = 0; n <= 4; ++n) expect_eq(sequences::qmotzkin(n), P(mot[n]), "M_" + std::to_string(n));
  const std::vector<std::vector<const char*>> nar = {
      {"1"},
      {"0", "1"},
      {"0", "1", "1"},
      {"0", "1", "2+q", "1"},
      {"0", "1", "3+3*q", "3+2*q+q^2", "1"},
      {"0", "1", "4+6*q+q^2-q^3", "6+8*q+5*q^2+q^3", "4+3*q+2*q^2+q^3", "1"},
  };
  const auto t = sequences::narayana_triangle(5);
  for (std::size_t n = 0; n < nar.size(); ++n) {
    for (std::size_t k = 0; k < nar[n].size(); ++k)
      expect_eq(t.at(n, k), P(nar[n][k]), "N(" + std::to_string(n) + "," + std::to_string(k) + ")");
  }
  const std::vector<std::vector<const char*>> nstar = {
      {"1"},
      {"1", "1"},
      {"1", "2+q", "1"},
      {"1", "3+2*q+q^2", "3+2*q+q^2", "1"},
      {"1", "4+3*q+2*q^2+q^3", "6+6*q+5*q^2+2*q^3+q^4", "4+3*q+2*q^2+q^3", "1"},
  };
  const auto ts = sequences::nstar_triangle(5);
  for (std::size_t n = 1; n <= nstar.size(); ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      expect_eq(ts.at(n, k), P(nstar[n - 1][k - 1]), "N*(" + std::to_string(n) + "," + std::to_string(k) + ")");
    }
  }
  // s is carried by b.
  const char* pg[] = {"1", "1", "1+b", "1+2*b+q*b+b^2", "1+3*b+2*q*b+q^2*b+3*b^2+2*q*b^2+q^2*b^2+b^3"};
  for (int n = 0; n <= 4; ++n)
    expect_eq(sub(sequences::cstar(n), {{Var::a, Poly(1)}}), P(pg[n]), "C*_" + std::to_string(n) + "(1,s)");
}

void catalan_ratio() {
  const PolySeries f = build_ratio_series(RatioKind::f_catalan, a, b, 13);
  for (int n = 0; n <= 12; ++n)
    expect_eq(f[static_cast<std::size_t>(n)], sequences::qcatalan(n), "n=" + std::to_string(n));
}

void gould() {
  for (const char* name :
       {"eq5_gr_recurrence", "eq6_gould_coeffs", "eq7_gr1", "eq8_eq9_products", "gould_special_values"}) {
    expect_check(name, 8);
  }
}

void theorem() {
  expect_check("thm_eq18_eq19_hankel", 5);
  const auto cat = family_sequence(HankelFamily::qcatalan, 15, a, b);
  for (int n = 0; n <= 6; ++n) {
    expect_eq(hankel_det(cat, 0, n), Poly::q_pow(static_cast<std::uint32_t>(n * (n + 1) * (4 * n - 1) / 6)),
              "shift 0, n=" + std::to_string(n));
    expect_eq(hankel_det(cat, 1, n), Poly::q_pow(static_cast<std::uint32_t>(n * (n + 1) * (4 * n + 5) / 6)),
              "shift 1, n=" + std::to_string(n));
  }
}

void lemma() {
  for (const char* name : {"lemma_product_law", "lemma_shifted_law", "lemma_orthogonality"}) expect_check(name, 5);
}

void extraction() {
  expect_check("jfraction_extraction", 5);
  const auto m = family_sequence(HankelFamily::narayana, 12, a, b);
  const JFraction jf = jfraction_from_moments(MomentFunctional{m}, 5);
  expect_eq(jf.s[0], a + b, "s_0");
  expect_eq(jf.t[0], q * (a + b) * b, "t_0");
  for (std::uint32_t n = 1; n <= 4; ++n) {
    expect_eq(jf.s[n], Poly::q_pow(n) * (a + Poly::q_pow(n - 1) * b + Poly::q_pow(n) * b), "s_" + std::to_string(n));
    expect_eq(jf.t[n], Poly::q_pow(3 * n + 1) * b * (Poly::q_pow(n) * b + a), "t_" + std::to_string(n));
  }
  expect_eq(jf.s[5], Poly::q_pow(5) * (a + Poly::q_pow(4) * b + Poly::q_pow(5) * b), "s_5");
}

void cstar_determinants() {
  expect_check("eq30_31_hankel_cstar", 5);
  expect_check("cstar_shift0_hankel", 5);
}

void specializations() {
  for (int n = 0; n <= 12; ++n) {
    expect_eq(sub(sequences::cstar(n), {{Var::q, q * q}, {Var::a, Poly(1)}, {Var::b, q}}), sequences::qcatalan(n),
              "C*_" + std::to_string(n) + "(1,q,q^2)");
  }
  expect_check("gauss_specialization", 5);
  const Series h = build_hstar(a, b, 11);
  Bindings bind;
  bind.set(Var::q, q * q).set(Var::a, Poly(1)).set(Var::b, q);
  expect(h.substitute(bind).first_difference(build_Er(2, 11).negate_z()) < 0, "h*(z,1,q,q^2) = E_2(-z) to order 10");
  for (int n = 0; n <= 5; ++n) {
    Poly gauss(1);
    for (int i = 1; i <= n; ++i) gauss *= 1 - Poly::q_pow(static_cast<std::uint32_t>(2 * i - 1));
    expect_eq(sub(sequences::rogers_szego(2 * n), {{Var::a, Poly(1)}, {Var::b, Poly(-1)}}), gauss,
              "r_" + std::to_string(2 * n));
  }
}

void motzkin() {
  expect_check("motzkin_hankel", 5);
  expect_check("motzkin_d_periodic", 4);
  const auto d = d_sequence(closed_jfraction(JFamily::motzkin, 12, a, b), 12);
  for (std::size_t n = 0; n < 12; ++n) {
    expect_eq(sub(d[n], {{Var::q, Poly(1)}}), Poly(static_cast<long>(motzkin_delta(n))),
              "d_" + std::to_string(n) + " at q=1");
  }
}

void explicit_orthopolys() {
  expect_check("remark_orthopoly_explicit", 5);
  expect_check("remark_orthopoly_catalan_erratum", 5, true);
}

void cli_gate() {
  std::ostringstream out;
  std::ostringstream err;
  expect(cli::cmd_dispatch({"verify", "--all", "--depth", "4"}, out, err) == 0, "verify --all --depth 4 exit code");
  std::ostringstream bad_out;
  const int code =
      cli::cmd_dispatch({"verify", "--all", "--depth", "4", "--inject-defect", "narayana:3"}, bad_out, err);
  expect(code == 1, "injected defect exit code " + std::to_string(code));
  expect(bad_out.str().find("FAIL eq13_15_recurrence_vs_ratio: n=3:") != std::string::npos,
         "defect counterexample names n=3");
}

struct Criterion {
  int id;
  const char* title;
  double limit_s;
  std::function<void()> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "golden sequences and tables", 1, golden},
      {2, "E_2(-qz)/E_2(-z) coefficients, n <= 12", 1, catalan_ratio},
      {3, "q-Gould identities and special values", 5, gould},
      {4, "q-Narayana Hankel determinants and q-Catalan exponents", 30, theorem},
      {5, "product law, shifted law, orthogonality", 30, lemma},
      {6, "J-fraction extraction from moments", 10, extraction},
      {7, "C* Hankel determinants", 30, cstar_determinants},
      {8, "specializations", 5, specializations},
      {9, "q-Motzkin determinants and delta", 10, motzkin},
      {10, "explicit orthogonal polynomials", 10, explicit_orthopolys},
      {11, "verify --all --depth 4 and injected defect", 60, cli_gate},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.body();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (error.empty() && s > c.limit_s) error = "over time limit";
    const bool ok = error.empty();
    failures += ok ? 0 : 1;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << s << " s, limit "
              << c.limit_s << " s)";
    if (!ok) std::cout << " -- " << error;
    std::cout << '\n';
  }
  return failures == 0 ? 0 : 1;
}
