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

#include <span>
#include <vector>

#include "nbwalk/edge_space.hpp"
#include "nbwalk/graph.hpp"
#include "nbwalk/tolerances.hpp"

namespace nbwalk {

struct IharaSample {
  double u = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;  // |lhs - rhs| / max(1, |lhs|, |rhs|)
};

struct IharaReport {
  std::vector<IharaSample> samples;  // ascending u
  double max_residual = 0.0;
  bool passed = false;  // max_residual < identity_residual
};

double relative_residual(double lhs, double rhs) noexcept;

// det(I - uB) against (1 - u^2)^(m-n) det(I - uA + u^2 (D - I)).
IharaReport unweighted_check(const Graph& g, std::span<const double> u_samples,
                             const Tolerances& tol = kDefaultTolerances);

// det((I - uP~)(I - u tau~) + u^2 tau~^2) against det(I - uA~ + u^2 D~).
IharaReport weighted_check(const Graph& g, const WeightAssignment& w,
                           std::span<const double> u_samples,
                           const Tolerances& tol = kDefaultTolerances);

// Same identity evaluated on an operator set supplied by the caller.
IharaReport weighted_check(const EdgeOperatorSet& ops, std::span<const double> u_samples,
                           const Tolerances& tol = kDefaultTolerances);

// Block structure of M^-1 X M with X = (I - uP~)(I - u tau~) + u^2 tau~^2 and
// M = [S~ R], R an orthonormal basis of ker(S~^T):
//   [ I - uA~ + u^2 D~   -uT~R + u^2 T~ tau~ R ]
//   [ 0                  I                      ]
struct DecompositionReport {
  double u = 0.0;
  double lower_left_norm = 0.0;        // max |block(2,1)|
  double lower_right_deviation = 0.0;  // max |block(2,2) - I|
  double upper_left_deviation = 0.0;   // max |block(1,1) - (I - uA~ + u^2 D~)|
  double upper_right_deviation = 0.0;  // max |block(1,2) - (-uT~R + u^2 T~ tau~ R)|
  // max |E M - I| for E = [(S~^T S~)^-1 S~^T ; (R^T R)^-1 R^T].
  double explicit_inverse_deviation = 0.0;
  bool passed = false;
};

// Throws SingularChangeOfBasis, NonPositiveWeight.
DecompositionReport decomposition_check(const Graph& g, const WeightAssignment& w, double u,
                                        const Tolerances& tol = kDefaultTolerances);

}  // namespace nbwalk
