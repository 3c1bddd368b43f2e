// Copyright 2026 The hermitian-grs Authors.
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hgrs {

enum class ErrorCode {
  CompositeCharacteristic,
  FieldTooLarge,
  DivisionByZero,
  LogOfZero,
  NotInSubfield,
  NoSolution,
  DuplicateLocator,
  DuplicateAbscissa,
  DegreeTooHigh,
  DimensionMismatch,
  EnumerationBudgetExceeded,
  CombinatorialBudgetExceeded,
  HypothesisViolated,
  NotInFamily,
  InvalidBeta,
  InvalidBetaM,
  InvalidArgument,
  ParseError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::CompositeCharacteristic: return "CompositeCharacteristic";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::LogOfZero: return "LogOfZero";
    case ErrorCode::NotInSubfield: return "NotInSubfield";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::DuplicateLocator: return "DuplicateLocator";
    case ErrorCode::DuplicateAbscissa: return "DuplicateAbscissa";
    case ErrorCode::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::EnumerationBudgetExceeded: return "EnumerationBudgetExceeded";
    case ErrorCode::CombinatorialBudgetExceeded: return "CombinatorialBudgetExceeded";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::NotInFamily: return "NotInFamily";
    case ErrorCode::InvalidBeta: return "InvalidBeta";
    case ErrorCode::InvalidBetaM: return "InvalidBetaM";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Budget errors are reported separately by the CLI (exit code 3).
constexpr bool is_budget_error(ErrorCode code) {
  return code == ErrorCode::EnumerationBudgetExceeded ||
         code == ErrorCode::CombinatorialBudgetExceeded;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hgrs
