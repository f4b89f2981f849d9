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

#include <functional>
#include <string>
#include <vector>

#include "qcat/poly.hpp"

namespace qcat::verify {

/// `erratum` means the check confirmed that a stated identity is false in
/// exactly the documented way and that the corrected statement holds. It does
/// not count as a failure.
enum class Outcome { passed, failed, erratum };

std::string to_string(Outcome o);

struct CheckReport {
  std::string name;
  int depth = 0;
  Outcome outcome = Outcome::failed;
  /// On failure: the first failing index tuple and both sides. On erratum:
  /// what was refuted and what was verified instead.
  std::string detail;

  bool passed() const { return outcome != Outcome::failed; }
};

struct CheckInfo {
  std::string name;
  std::string anchor;
};

/// Sequence generators the checks read through. Tests swap in a defective
/// source to make sure the checks actually bite.
struct Sources {
  std::function<Poly(int)> qcatalan;
  std::function<Poly(int)> qnarayana;
  std::function<Poly(int)> cstar;
  std::function<Poly(int)> qmotzkin;
  std::function<Poly(int)> rogers_szego;
};

Sources default_sources();

/// Same generators, except `family` (qcatalan|narayana|cstar|motzkin|rogers-szego)
/// returns its value plus 1 at `index`.
Sources with_defect(Sources base, const std::string& family, int index);

/// Registry order is the output order of run_all.
const std::vector<CheckInfo>& list_checks();

/// Throws UnknownCheck for names not in the registry and UsageError for depth < 1.
/// Arithmetic errors inside the check become a failed report.
CheckReport run_check(const std::string& name, int depth, const Sources& sources = default_sources());

/// Runs every registered check, in parallel across checks.
std::vector<CheckReport> run_all(int depth, const Sources& sources = default_sources());
/// Serial reference for run_all.
std::vector<CheckReport> run_all_serial(int depth, const Sources& sources = default_sources());

bool all_passed(const std::vector<CheckReport>& reports);

}  // namespace qcat::verify
