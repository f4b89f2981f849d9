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

#include "qcat/cli.hpp"

#include <CLI11.hpp>
#include <map>
#include <optional>

#include "qcat/errors.hpp"
#include "qcat/hankel.hpp"
#include "qcat/io.hpp"
#include "qcat/jfraction.hpp"
#include "qcat/poly.hpp"
#include "qcat/sequences.hpp"
#include "qcat/verify.hpp"

namespace qcat::cli {

namespace {

enum class Format { plain, json, csv };

const std::map<std::string, Format> kFormats = {{"plain", Format::plain}, {"json", Format::json}, {"csv", Format::csv}};

const std::map<std::string, HankelFamily> kHankelFamilies = {
    {"qcatalan", HankelFamily::qcatalan}, {"narayana", HankelFamily::narayana}, {"cstar", HankelFamily::cstar},
    {"fstar", HankelFamily::fstar},       {"motzkin", HankelFamily::motzkin},
};

const std::map<std::string, JFamily> kJFamilies = {
    {"narayana", JFamily::narayana},
    {"cstar_shift1", JFamily::cstar_shift1},
    {"cstar_shift0", JFamily::cstar_shift0},
    {"motzkin", JFamily::motzkin},
};

std::vector<std::string> keys(const auto& m) {
  std::vector<std::string> k;
  for (const auto& [name, _] : m) k.push_back(name);
  return k;
}

struct Options {
  std::string family;
  int n = 0;
  int k = 0;
  int r = 0;
  int shift = 0;
  int depth = 4;
  std::string a_expr;
  std::string b_expr;
  std::string format = "plain";
  std::string check;
  std::string defect;
  bool all = false;
  bool list = false;
  bool verify = false;
  bool from_moments = false;
  bool explicit_form = false;
};

void require_nonnegative(int v, const char* what) {
  if (v < 0) throw UsageError(std::string(what) + " must be nonnegative");
}

int cmd_seq(const Options& o, std::ostream& out) {
  require_nonnegative(o.n, "--n");
  const bool plain_family = o.family == "qcatalan" || o.family == "motzkin";
  if (plain_family && (!o.a_expr.empty() || !o.b_expr.empty())) {
    throw UnsupportedCombination("--a/--b do not apply to " + o.family);
  }
  std::function<Poly(int)> gen;
  if (o.family == "qcatalan") gen = sequences::qcatalan;
  if (o.family == "narayana") gen = sequences::qnarayana_poly;
  if (o.family == "cstar") gen = sequences::cstar;
  if (o.family == "motzkin") gen = sequences::qmotzkin;
  if (o.family == "rogers-szego") gen = sequences::rogers_szego;
  Bindings bind;
  if (!o.a_expr.empty()) bind.set(Var::a, parse_poly(o.a_expr));
  if (!o.b_expr.empty()) bind.set(Var::b, parse_poly(o.b_expr));
  std::vector<Poly> values;
  for (int i = 0; i <= o.n; ++i) values.push_back(substitute(gen(i), bind));

  switch (kFormats.at(o.format)) {
    case Format::plain:
      for (const auto& v : values) out << to_string(v) << '\n';
      break;
    case Format::json: {
      nlohmann::ordered_json doc = nlohmann::ordered_json::array();
      for (const auto& v : values) doc.push_back(to_json(v));
      out << doc.dump() << '\n';
      break;
    }
    case Format::csv:
      out << "n,value\n";
      for (std::size_t i = 0; i < values.size(); ++i) out << i << ',' << to_string(values[i]) << '\n';
      break;
  }
  return kOk;
}

int cmd_triangle(const Options& o, std::ostream& out) {
  require_nonnegative(o.n, "--rows");
  const auto t = o.family == "narayana" ? sequences::narayana_triangle(o.n) : sequences::nstar_triangle(o.n);
  switch (kFormats.at(o.format)) {
    case Format::plain:
      for (const auto& row : t.rows) {
        for (std::size_t k = 0; k < row.size(); ++k) out << (k ? "\t" : "") << to_string(row[k]);
        out << '\n';
      }
      break;
    case Format::json: {
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& row : t.rows) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& v : row) r.push_back(to_string(v));
        rows.push_back(std::move(r));
      }
      out << nlohmann::json{{"rows", rows}}.dump() << '\n';
      break;
    }
    case Format::csv:
      out << "row,col,value\n";
      for (std::size_t n = 0; n < t.size(); ++n) {
        for (std::size_t k = 0; k < t.rows[n].size(); ++k) out << n << ',' << k << ',' << to_string(t.at(n, k)) << '\n';
      }
      break;
  }
  return kOk;
}

int cmd_gould(const Options& o, std::ostream& out) {
  require_nonnegative(o.k, "--k");
  require_nonnegative(o.n, "--n");
  require_nonnegative(o.r, "--r");
  out << to_string(sequences::gould(o.k, o.n, o.r)) << '\n';
  return kOk;
}

int cmd_hankel(const Options& o, std::ostream& out) {
  require_nonnegative(o.n, "--n");
  require_nonnegative(o.shift, "--shift");
  const HankelFamily family = kHankelFamilies.at(o.family);
  const Poly a = Poly::var(Var::a);
  const Poly b = Poly::var(Var::b);
  if (!o.verify) {
    const auto seq = family_sequence(family, static_cast<std::size_t>(2 * o.n + o.shift + 1), a, b);
    out << to_string(hankel_det(seq, o.shift, o.n)) << '\n';
    return kOk;
  }
  const HankelReport rep = hankel_report(family, o.shift, o.n, a, b);
  out << "computed: " << to_string(rep.computed) << '\n';
  out << "expected: " << to_string(rep.expected) << '\n';
  out << (rep.match ? "match" : "mismatch") << '\n';
  return rep.match ? kOk : kVerificationFailed;
}

std::vector<Poly> moments_of(JFamily family, std::size_t count) {
  std::vector<Poly> m;
  const Poly a = Poly::var(Var::a);
  for (std::size_t i = 0; i < count; ++i) {
    const int n = static_cast<int>(i);
    switch (family) {
      case JFamily::narayana: m.push_back(sequences::qnarayana_poly(n)); break;
      case JFamily::cstar_shift1: m.push_back(exact_div(sequences::cstar(n + 1), a)); break;
      case JFamily::cstar_shift0: m.push_back(sequences::cstar(n)); break;
      case JFamily::motzkin: m.push_back(sequences::qmotzkin(n)); break;
    }
  }
  return m;
}

int cmd_jfraction(const Options& o, std::ostream& out) {
  if (o.depth < 1) throw UsageError("--depth must be at least 1");
  const JFamily family = kJFamilies.at(o.family);
  JFraction jf;
  if (o.from_moments) {
    jf = jfraction_from_moments(MomentFunctional{moments_of(family, static_cast<std::size_t>(2 * o.depth + 2))},
                                o.depth);
    jf.s.resize(static_cast<std::size_t>(o.depth));
  } else {
    jf = closed_jfraction(family, o.depth, Poly::var(Var::a), Poly::var(Var::b));
  }
  for (std::size_t k = 0; k < jf.s.size(); ++k) out << "s_" << k << ": " << to_string(jf.s[k]) << '\n';
  for (std::size_t k = 0; k < jf.t.size(); ++k) out << "t_" << k << ": " << to_string(jf.t[k]) << '\n';
  return kOk;
}

int cmd_orthopoly(const Options& o, std::ostream& out) {
  require_nonnegative(o.n, "--n");
  ZPoly p;
  if (o.explicit_form) {
    static const std::map<std::string, ExplicitFamily> families = {
        {"narayana", ExplicitFamily::narayana_ab},
        {"narayana_01", ExplicitFamily::narayana_01},
        {"cstar_shift1", ExplicitFamily::cstar_shift1},
        {"cstar_shift0", ExplicitFamily::cstar_shift0},
    };
    const auto it = families.find(o.family);
    if (it == families.end()) throw UnsupportedCombination("no explicit form for " + o.family);
    p = orthopoly_explicit(it->second, o.n);
  } else if (o.family == "narayana_01") {
    p = orthopoly(closed_jfraction(JFamily::narayana, o.n + 1, Poly(0), Poly(1)), o.n);
  } else {
    p = orthopoly(closed_jfraction(kJFamilies.at(o.family), o.n + 1, Poly::var(Var::a), Poly::var(Var::b)), o.n);
  }
  out << to_string(p) << '\n';
  return kOk;
}

verify::Sources sources_for(const std::string& defect) {
  if (defect.empty()) return verify::default_sources();
  const auto colon = defect.rfind(':');
  if (colon == std::string::npos) throw UsageError("--inject-defect expects FAMILY:INDEX");
  int index = 0;
  try {
    index = std::stoi(defect.substr(colon + 1));
  } catch (const std::exception&) {
    throw UsageError("--inject-defect index is not an integer");
  }
  return verify::with_defect(verify::default_sources(), defect.substr(0, colon), index);
}

void print_report(const verify::CheckReport& r, std::ostream& out) {
  out << verify::to_string(r.outcome) << ' ' << r.name;
  if (!r.detail.empty()) out << ": " << r.detail;
  out << '\n';
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.list) {
    for (const auto& c : verify::list_checks()) out << c.name << '\t' << c.anchor << '\n';
    return kOk;
  }
  if (o.all == !o.check.empty()) throw UsageError("verify needs exactly one of --all or --check NAME");
  const verify::Sources sources = sources_for(o.defect);
  std::vector<verify::CheckReport> reports;
  if (o.all) {
    reports = verify::run_all(o.depth, sources);
  } else {
    reports.push_back(verify::run_check(o.check, o.depth, sources));
  }
  std::size_t passed = 0;
  std::size_t errata = 0;
  std::size_t failed = 0;
  for (const auto& r : reports) {
    print_report(r, out);
    switch (r.outcome) {
      case verify::Outcome::passed: ++passed; break;
      case verify::Outcome::erratum: ++errata; break;
      case verify::Outcome::failed: ++failed; break;
    }
  }
  out << passed << " passed, " << errata << " errata, " << failed << " failed (depth " << o.depth << ")\n";
  return failed == 0 ? kOk : kVerificationFailed;
}

}  // namespace

int cmd_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact q-Catalan, q-Narayana and q-Motzkin computations", "qcat"};
  app.require_subcommand(1);
  Options o;

  auto* seq = app.add_subcommand("seq", "print the first terms of a sequence");
  seq->add_option("family", o.family)
      ->required()
      ->check(CLI::IsMember({"qcatalan", "narayana", "cstar", "motzkin", "rogers-szego"}));
  seq->add_option("--n", o.n, "last index")->required();
  seq->add_option("--a", o.a_expr, "polynomial in q substituted for a");
  seq->add_option("--b", o.b_expr, "polynomial in q substituted for b (the Polya-Gessel s)");
  seq->add_option("--format", o.format)->check(CLI::IsMember(keys(kFormats)));

  auto* tri = app.add_subcommand("triangle", "print a coefficient triangle");
  tri->add_option("family", o.family)->required()->check(CLI::IsMember({"narayana", "nstar"}));
  tri->add_option("--rows", o.n, "last row")->required();
  tri->add_option("--format", o.format)->check(CLI::IsMember(keys(kFormats)));

  auto* gould = app.add_subcommand("gould", "print the q-Gould polynomial G(k,n,r)");
  gould->add_option("--k", o.k)->required();
  gould->add_option("--n", o.n)->required();
  gould->add_option("--r", o.r)->required();

  auto* hankel = app.add_subcommand("hankel", "Hankel determinant of a family");
  hankel->add_option("family", o.family)->required()->check(CLI::IsMember(keys(kHankelFamilies)));
  hankel->add_option("--shift", o.shift)->required();
  hankel->add_option("--n", o.n, "matrix indices run over 0..n")->required();
  hankel->add_flag("--verify", o.verify, "compare with the closed form");

  auto* jfr = app.add_subcommand("jfraction", "J-fraction coefficients of a family");
  jfr->add_option("family", o.family)->required()->check(CLI::IsMember(keys(kJFamilies)));
  jfr->add_option("--depth", o.depth)->required();
  jfr->add_flag("--from-moments", o.from_moments, "extract from the moment sequence");

  auto* ortho = app.add_subcommand("orthopoly", "orthogonal polynomial p_n");
  ortho->add_option("family", o.family)
      ->required()
      ->check(CLI::IsMember({"narayana", "narayana_01", "cstar_shift1", "cstar_shift0", "motzkin"}));
  ortho->add_option("--n", o.n)->required();
  ortho->add_flag("--explicit", o.explicit_form, "use the double-sum closed form");

  auto* ver = app.add_subcommand("verify", "run identity checks");
  ver->add_flag("--all", o.all, "run every registered check");
  ver->add_option("--check", o.check, "run one check");
  ver->add_option("--depth", o.depth, "verification depth (default 4)");
  ver->add_flag("--list", o.list, "list checks with their anchors");
  ver->add_option("--inject-defect", o.defect, "FAMILY:INDEX, adds 1 to one sequence value (testing aid)");

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.emplace_back("qcat");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "qcat: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*seq) return cmd_seq(o, out);
    if (*tri) return cmd_triangle(o, out);
    if (*gould) return cmd_gould(o, out);
    if (*hankel) return cmd_hankel(o, out);
    if (*jfr) return cmd_jfraction(o, out);
    if (*ortho) return cmd_orthopoly(o, out);
    return cmd_verify(o, out);
  } catch (const UsageError& e) {
    err << "qcat: " << e.what() << '\n';
    return kUsage;
  } catch (const ArithmeticError& e) {
    err << "qcat: arithmetic error: " << e.what() << '\n';
    return kArithmetic;
  }
}

}  // namespace qcat::cli
