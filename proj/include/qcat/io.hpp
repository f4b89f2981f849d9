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

#include <json.hpp>
#include <string>
#include <string_view>

#include "qcat/poly.hpp"

namespace qcat {

/// Parses integers, q, a, b, u, +, -, *, ^ and parentheses. Canonical
/// to_string() output always parses back to the same Poly.
/// Throws ParseError with the offending position.
Poly parse_poly(std::string_view text);

/// {"vars":["q","a","b"],"terms":[{"c":"<signed decimal>","e":[e_q,e_a,e_b]},...]}
/// in canonical term order. "u" is appended to vars (and e) only if it occurs.
nlohmann::ordered_json to_json(const Poly& p);

/// Inverse of to_json; throws ParseError on schema violations.
Poly poly_from_json(const nlohmann::ordered_json& j);

}  // namespace qcat
