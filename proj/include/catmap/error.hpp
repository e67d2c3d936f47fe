// Copyright 2026 The catmap Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace catmap {

enum class ErrorCode {
    NotCoprime,
    EvenModulus,
    NonPositiveModulus,
    ModuliNotCoprime,
    DetNotOne,
    NotThetaMember,
    InvalidParity,
    UnsupportedParity,
    Vanishing,
    IndexOutOfRange,
    InvalidDimension,
    NotCongruent,
    CapExceeded,
    LiftFailure,
    ParseError,
};

std::string_view to_string(ErrorCode code);

/// Every precondition failure in the library is reported through this type;
/// `code()` identifies which contract was violated.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string &what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::EvenModulus: return "EvenModulus";
    case ErrorCode::NonPositiveModulus: return "NonPositiveModulus";
    case ErrorCode::ModuliNotCoprime: return "ModuliNotCoprime";
    case ErrorCode::DetNotOne: return "DetNotOne";
    case ErrorCode::NotThetaMember: return "NotThetaMember";
    case ErrorCode::InvalidParity: return "InvalidParity";
    case ErrorCode::UnsupportedParity: return "UnsupportedParity";
    case ErrorCode::Vanishing: return "Vanishing";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InvalidDimension: return "InvalidDimension";
    case ErrorCode::NotCongruent: return "NotCongruent";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::LiftFailure: return "LiftFailure";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace catmap
