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

#include <sstream>

#include "qcat/cli.hpp"
#include "qcat/io.hpp"

using qcat::cli::cmd_dispatch;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cmd_dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

}  // namespace

TEST_CASE("seq") {
  const Run r = run({"seq", "qcatalan", "--n", "4"});
  CHECK(r.code == 0);
  CHECK(lines(r.out) == std::vector<std::string>{"1", "1", "1 + q", "1 + 2*q + q^2 + q^3",
                                                 "1 + 3*q + 3*q^2 + 3*q^3 + 2*q^4 + q^5 + q^6"});
  const Run pg = run({"seq", "cstar", "--n", "3", "--a", "1", "--b", "b"});
  CHECK(lines(pg.out).back() == "1 + 2*b + q*b + b^2");
  const Run sub = run({"seq", "narayana", "--n", "2", "--a", "0", "--b", "1"});
  CHECK(lines(sub.out).back() == "1 + q");
  const Run csv = run({"seq", "motzkin", "--n", "2", "--format", "csv"});
  CHECK(lines(csv.out) == std::vector<std::string>{"n,value", "0,1", "1,1", "2,1 + q"});
}

TEST_CASE("json output round-trips to the plain output") {
  for (const char* family : {"qcatalan", "narayana", "cstar", "motzkin", "rogers-szego"}) {
    const Run plain = run({"seq", family, "--n", "8"});
    const Run json = run({"seq", family, "--n", "8", "--format", "json"});
    REQUIRE(plain.code == 0);
    REQUIRE(json.code == 0);
    const auto doc = nlohmann::ordered_json::parse(json.out);
    std::string rendered;
    for (const auto& p : doc) rendered += to_string(qcat::poly_from_json(p)) + "\n";
    CHECK(rendered == plain.out);
  }
}

TEST_CASE("triangle") {
  const Run r = run({"triangle", "narayana", "--rows", "3", "--format", "json"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["rows"][3] == nlohmann::json::array({"0", "1", "2 + q", "1"}));
  const Run ns = run({"triangle", "nstar", "--rows", "4"});
  CHECK(lines(ns.out)[4] == "0\t1\t3 + 2*q + q^2\t3 + 2*q + q^2\t1");
  const Run csv = run({"triangle", "nstar", "--rows", "1", "--format", "csv"});
  CHECK(lines(csv.out) == std::vector<std::string>{"row,col,value", "0,0,1", "1,0,0", "1,1,1"});
}

TEST_CASE("gould, hankel, jfraction, orthopoly") {
  CHECK(run({"gould", "--k", "2", "--n", "2", "--r", "0"}).out == "q\n");
  const Run h = run({"hankel", "qcatalan", "--shift", "0", "--n", "2"});
  CHECK(h.out == "q^7\n");
  const Run hv = run({"hankel", "motzkin", "--shift", "1", "--n", "4", "--verify"});
  CHECK(hv.code == 0);
  CHECK(lines(hv.out).back() == "match");
  CHECK(run({"hankel", "motzkin", "--shift", "2", "--n", "1", "--verify"}).code == 2);
  const Run closed = run({"jfraction", "cstar_shift0", "--depth", "3"});
  const Run extracted = run({"jfraction", "cstar_shift0", "--depth", "3", "--from-moments"});
  CHECK(closed.code == 0);
  CHECK(closed.out == extracted.out);
  CHECK(lines(closed.out)[0] == "s_0: a");
  const Run ex = run({"orthopoly", "cstar_shift1", "--n", "3", "--explicit"});
  CHECK(ex.out == run({"orthopoly", "cstar_shift1", "--n", "3"}).out);
  CHECK(run({"orthopoly", "motzkin", "--n", "2", "--explicit"}).code == 2);
}

TEST_CASE("verify") {
  const Run all = run({"verify", "--all"});
  CHECK(all.code == 0);
  CHECK(all.out.find("(depth 4)") != std::string::npos);
  const Run broken = run({"verify", "--all", "--inject-defect", "narayana:3"});
  CHECK(broken.code == 1);
  CHECK(broken.out.find("FAIL eq13_15_recurrence_vs_ratio: n=3:") != std::string::npos);
  const Run one = run({"verify", "--check", "motzkin_values", "--depth", "5"});
  CHECK(one.code == 0);
  CHECK(lines(one.out)[0] == "PASS motzkin_values");
  CHECK(run({"verify", "--list"}).out.find("cn_eq_cstar_1_q_q2\tC_n(q) = C*_n(1, q, q^2)") != std::string::npos);
  CHECK(run({"verify", "--check", "nope"}).code == 2);
  CHECK(run({"verify"}).code == 2);
}

TEST_CASE("usage and parse errors exit 2 with a one-line diagnostic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"seq", "bogus", "--n", "2"},
           {"seq", "qcatalan"},
           {"seq", "narayana", "--n", "2", "--a", "1 +"},
           {"seq", "qcatalan", "--n", "2", "--a", "1"},
           {"triangle", "narayana", "--rows", "-1"},
           {"seq", "qcatalan", "--n", "2", "--format", "xml"},
       }) {
    const Run r = run(args);
    CHECK(r.code == 2);
    CHECK(lines(r.err).size() == 1);
  }
}

TEST_CASE("arithmetic errors exit 3") {
  const Run r = run({"seq", "narayana", "--n", "2", "--a", "q^4294967295"});
  CHECK(r.code == 3);
  CHECK(lines(r.err).size() == 1);
}
