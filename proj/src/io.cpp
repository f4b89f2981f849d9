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

#include "qcat/io.hpp"

#include <cctype>
#include <limits>

#include "qcat/errors.hpp"

namespace qcat {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Poly parse() {
    Poly p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse \"" + std::string(text_) + "\" at position " + std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly p = signed_term();
    for (;;) {
      if (accept('+')) {
        p += term();
      } else if (accept('-')) {
        p -= term();
      } else {
        return p;
      }
    }
  }

  Poly signed_term() {
    if (accept('-')) return -term();
    accept('+');
    return term();
  }

  Poly term() {
    Poly p = power();
    while (accept('*')) p *= power();
    return p;
  }

  Poly power() {
    Poly base = atom();
    if (accept('^')) {
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a nonnegative integer exponent");
      unsigned long e = 0;
      try {
        e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      } catch (const std::exception&) {
        fail("exponent out of range");
      }
      if (e > std::numeric_limits<std::uint32_t>::max()) fail("exponent out of range");
      // Large powers are only cheap for a single term with coefficient +-1.
      const bool cheap = base.size() <= 1 && (base.is_zero() || abs(base.terms()[0].second) == 1);
      if (!cheap && e > 100000) fail("exponent too large for this base");
      return base.pow(static_cast<std::uint32_t>(e));
    }
    return base;
  }

  Poly atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (c == '-') {
      ++pos_;
      return -atom();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Poly(Integer(std::string(text_.substr(start, pos_ - start))));
    }
    ++pos_;
    switch (c) {
      case 'q': return Poly::var(Var::q);
      case 'a': return Poly::var(Var::a);
      case 'b': return Poly::var(Var::b);
      case 'u': return Poly::var(Var::u);
      default: --pos_; fail("unexpected '" + std::string(1, c) + "'");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text) {
  return Parser(text).parse();
}

nlohmann::ordered_json to_json(const Poly& p) {
  const bool with_u = p.contains(Var::u);
  const std::size_t nvars = with_u ? 4 : 3;
  nlohmann::ordered_json vars = nlohmann::ordered_json::array({"q", "a", "b"});
  if (with_u) vars.push_back("u");
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [m, c] : p.terms()) {
    nlohmann::ordered_json e = nlohmann::ordered_json::array();
    for (std::size_t v = 0; v < nvars; ++v) e.push_back(m.exp[v]);
    terms.push_back({{"c", c.get_str()}, {"e", std::move(e)}});
  }
  return {{"vars", std::move(vars)}, {"terms", std::move(terms)}};
}

Poly poly_from_json(const nlohmann::ordered_json& j) {
  try {
    const auto& vars = j.at("vars");
    if (!vars.is_array() || vars.size() < 3 || vars.size() > kNumVars) throw ParseError("bad \"vars\" list");
    static constexpr const char* kNames[] = {"q", "a", "b", "u"};
    for (std::size_t v = 0; v < vars.size(); ++v) {
      if (vars[v].get<std::string>() != kNames[v]) throw ParseError("unexpected variable order in \"vars\"");
    }
    std::vector<Poly::Term> terms;
    for (const auto& t : j.at("terms")) {
      const auto& e = t.at("e");
      if (!e.is_array() || e.size() != vars.size()) throw ParseError("exponent list does not match \"vars\"");
      Monomial m;
      for (std::size_t v = 0; v < e.size(); ++v) m.exp[v] = e[v].get<std::uint32_t>();
      Integer c;
      if (c.set_str(t.at("c").get<std::string>(), 10) != 0) throw ParseError("bad coefficient");
      terms.emplace_back(m, std::move(c));
    }
    return Poly::from_terms(std::move(terms));
  } catch (const nlohmann::ordered_json::exception& ex) {
    throw ParseError(std::string("malformed polynomial JSON: ") + ex.what());
  }
}

}  // namespace qcat
