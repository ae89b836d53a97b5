// Copyright 2026 The nbwalk Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nbwalk/error.hpp"

namespace nbwalk {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MalformedLine: return "MalformedLine";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::TooFewVertices: return "TooFewVertices";
    case ErrorCode::MinDegreeViolation: return "MinDegreeViolation";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::InfeasibleProfile: return "InfeasibleProfile";
    case ErrorCode::GenerationExhausted: return "GenerationExhausted";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::SingularChangeOfBasis: return "SingularChangeOfBasis";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::NotBiregular: return "NotBiregular";
    case ErrorCode::DimensionOverflow: return "DimensionOverflow";
    case ErrorCode::MissingPerron: return "MissingPerron";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace nbwalk
