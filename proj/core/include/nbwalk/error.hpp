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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nbwalk {

enum class ErrorCode {
  MalformedLine,
  SelfLoop,
  DuplicateEdge,
  TooFewVertices,
  MinDegreeViolation,
  UnknownVertex,
  InfeasibleProfile,
  GenerationExhausted,
  NotSquare,
  DimensionMismatch,
  NotSymmetric,
  NoConvergence,
  RankDeficient,
  SingularMatrix,
  NonPositiveWeight,
  SingularChangeOfBasis,
  NotRegular,
  NotBiregular,
  DimensionOverflow,
  MissingPerron,
  DegreeTooSmall,
  ZeroVector,
  InvalidArgument,
  Io,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries a machine-readable code; the
// message names the offending line, vertex or dimension where one exists.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace nbwalk
