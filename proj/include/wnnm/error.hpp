// Copyright 2026 The wnnm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WNNM_ERROR_HPP
#define WNNM_ERROR_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace wnnm {

enum class ErrorCode {
  InvalidInput,
  PreconditionViolation,
  NumericalFailure,
  ConvergenceFailure,
  ParseError,
  IoError,
};

// Base of every exception thrown by the library. The code maps one-to-one
// onto the status values of the C API.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string& what)
      : Error(ErrorCode::InvalidInput, what) {}
};

class PreconditionViolation : public Error {
 public:
  explicit PreconditionViolation(const std::string& what)
      : Error(ErrorCode::PreconditionViolation, what) {}
};

// Iterative decomposition that did not settle within its sweep budget.
class NumericalFailure : public Error {
 public:
  NumericalFailure(const std::string& what, int iterations)
      : Error(ErrorCode::NumericalFailure, what), iterations_(iterations) {}

  int iterations() const noexcept { return iterations_; }

 private:
  int iterations_;
};

// Carries the last iterate so callers can inspect how far the solver got.
class ConvergenceFailure : public Error {
 public:
  ConvergenceFailure(const std::string& what, std::vector<double> last_iterate,
                     double last_objective)
      : Error(ErrorCode::ConvergenceFailure, what),
        last_iterate_(std::move(last_iterate)),
        last_objective_(last_objective) {}

  const std::vector<double>& last_iterate() const noexcept {
    return last_iterate_;
  }
  double last_objective() const noexcept { return last_objective_; }

 private:
  std::vector<double> last_iterate_;
  double last_objective_;
};

// Malformed text or binary input. Line and column are 1-based; 0 means
// "not applicable" (e.g. a truncated binary payload).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0,
             std::size_t column = 0)
      : Error(ErrorCode::ParseError, format(what, line, column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line,
                            std::size_t column) {
    if (line == 0) return what;
    return "line " + std::to_string(line) + ", column " +
           std::to_string(column) + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorCode::IoError, what) {}
};

}  // namespace wnnm

#endif  // WNNM_ERROR_HPP
