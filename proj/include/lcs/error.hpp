// Copyright 2026 The lcsgame Authors
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

namespace lcs {

enum class ErrorKind {
    DimensionMismatch,
    NotPrime,
    RowOutOfRange,
    EnumerationTooLarge,
    NotASolution,
    SearchBudgetExceeded,
    NonCommutingFactors,
    InvariantViolation,
    VariableUnused,
    ParseError,
    UnitarityViolation,
    JNotIdentified,
    UnknownExample,
};

inline std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::RowOutOfRange: return "RowOutOfRange";
        case ErrorKind::EnumerationTooLarge: return "EnumerationTooLarge";
        case ErrorKind::NotASolution: return "NotASolution";
        case ErrorKind::SearchBudgetExceeded: return "SearchBudgetExceeded";
        case ErrorKind::NonCommutingFactors: return "NonCommutingFactors";
        case ErrorKind::InvariantViolation: return "InvariantViolation";
        case ErrorKind::VariableUnused: return "VariableUnused";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::UnitarityViolation: return "UnitarityViolation";
        case ErrorKind::JNotIdentified: return "JNotIdentified";
        case ErrorKind::UnknownExample: return "UnknownExample";
    }
    return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
};

}  // namespace lcs
