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

#include <stdexcept>
#include <string>

namespace qcat {

/// Base of every exact-arithmetic failure. The CLI maps these to exit code 3.
class ArithmeticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotDivisible : public ArithmeticError {
 public:
  using ArithmeticError::ArithmeticError;
};

class DivByZero : public ArithmeticError {
 public:
  using ArithmeticError::ArithmeticError;
};

class ExponentOverflow : public ArithmeticError {
 public:
  using ArithmeticError::ArithmeticError;
};

class NonUnitConstantTerm : public ArithmeticError {
 public:
  using ArithmeticError::ArithmeticError;
};

class DenominatorResidue : public ArithmeticError {
 public:
  using ArithmeticError::ArithmeticError;
};

class InsufficientMoments : public ArithmeticError {
 public:
  using ArithmeticError::ArithmeticError;
};

class InsufficientDepth : public ArithmeticError {
 public:
  using ArithmeticError::ArithmeticError;
};

class InsufficientCoefficients : public ArithmeticError {
 public:
  using ArithmeticError::ArithmeticError;
};

/// F(p_k^2) vanished: no J-fraction exists past level `level`.
class Breakdown : public ArithmeticError {
 public:
  Breakdown(int level, const std::string& what) : ArithmeticError(what), level_(level) {}
  int level() const noexcept { return level_; }

 private:
  int level_;
};

/// Caller asked for something the library does not model (bad family/shift pair, unknown check).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnsupportedCombination : public UsageError {
 public:
  using UsageError::UsageError;
};

class UnknownCheck : public UsageError {
 public:
  using UsageError::UsageError;
};

class ParseError : public UsageError {
 public:
  using UsageError::UsageError;
};

}  // namespace qcat
