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

namespace nbwalk {

// Single source of truth for every numerical threshold used by the library,
// the CLI and the acceptance suite.
struct Tolerances {
  double symmetry = 1e-12;           // |M - M^T| entries accepted as symmetric
  double jacobi_off_diagonal = 1e-12; // Jacobi sweep stopping criterion
  double eigen_cluster = 1e-8;       // eigenvalues closer than this merge
  double null_drop = 1e-10;          // Gram-Schmidt drop tolerance
  double operator_identity = 1e-10;  // max-norm residual of operator identities
  double identity_residual = 1e-9;   // relative determinant residual (Ihara checks)
  double spectrum_match = 1e-6;      // closed-form vs dense spectra
  double perron = 1e-9;              // distance to 1 accepted as the Perron root
  double distribution_mass = 1e-12;  // |sum - 1| for a Distribution
  double singular_pivot = 1e-12;     // |det(I + u tau~)| below this skips a sample
};

inline constexpr Tolerances kDefaultTolerances{};

}  // namespace nbwalk
