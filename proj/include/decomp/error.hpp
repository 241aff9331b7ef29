// Copyright 2026 The decomp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DECOMP_ERROR_HPP
#define DECOMP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace decomp {

enum class ErrorCode {
  DivisionByZero,
  DescriptorMismatch,
  NotInvertible,
  NotPrime,
  InvalidModulus,
  SampleBoundTooLarge,
  DuplicateNodes,
  NotCoprime,
  NoRefinementExists,
  SingularSystem,
  RefinementMismatch,
  BetaTooGeneric,
  PrecisionMismatch,
  SingularAtZero,
  Singular,
  SingularJacobian,
  NoSolutionWithinCaps,
  Unlucky,
  ParametrizationCheckFailed,
  InconsistentDegrees,
  NoVerifiedSolution,
  NotSquareFree,
  TooLarge,
  InvalidInstance,
  NonGenericInput,
  ParseError,
  Unsupported,
  Fail,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::DescriptorMismatch: return "DescriptorMismatch";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::InvalidModulus: return "InvalidModulus";
    case ErrorCode::SampleBoundTooLarge: return "SampleBoundTooLarge";
    case ErrorCode::DuplicateNodes: return "DuplicateNodes";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::NoRefinementExists: return "NoRefinementExists";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::RefinementMismatch: return "RefinementMismatch";
    case ErrorCode::BetaTooGeneric: return "BetaTooGeneric";
    case ErrorCode::PrecisionMismatch: return "PrecisionMismatch";
    case ErrorCode::SingularAtZero: return "SingularAtZero";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::SingularJacobian: return "SingularJacobian";
    case ErrorCode::NoSolutionWithinCaps: return "NoSolutionWithinCaps";
    case ErrorCode::Unlucky: return "Unlucky";
    case ErrorCode::ParametrizationCheckFailed: return "ParametrizationCheckFailed";
    case ErrorCode::InconsistentDegrees: return "InconsistentDegrees";
    case ErrorCode::NoVerifiedSolution: return "NoVerifiedSolution";
    case ErrorCode::NotSquareFree: return "NotSquareFree";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InvalidInstance: return "InvalidInstance";
    case ErrorCode::NonGenericInput: return "NonGenericInput";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::Fail: return "Fail";
  }
  return "Unknown";
}

/// All library failures surface as this exception; `code()` says which one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  explicit Error(ErrorCode code) : std::runtime_error(to_string(code)), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace decomp

#endif  // DECOMP_ERROR_HPP
