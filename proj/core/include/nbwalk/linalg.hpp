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

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

#include "nbwalk/matrix.hpp"
#include "nbwalk/tolerances.hpp"

// Self-contained dense kernel sized for desk-scale problems (a few hundred
// rows at most). No balancing is performed before the Hessenberg reduction;
// inputs are expected to have O(1) entries.
namespace nbwalk::linalg {

using Complex = std::complex<double>;

inline constexpr std::size_t kMaxGeneralEigenDimension = 512;

// Partial-pivoting LU; row swaps flip the sign exactly. A singular input
// yields 0 (or a roundoff-sized value).
double lu_determinant(const Matrix& m);

// Throws SingularMatrix when a pivot vanishes.
Matrix inverse(const Matrix& m);

struct SymmetricEigen {
  std::vector<double> values;  // ascending
  Matrix vectors;              // column k pairs with values[k]; orthonormal
};

// Cyclic Jacobi rotations. Throws NotSymmetric, NoConvergence.
SymmetricEigen symmetric_eigen(const Matrix& m, const Tolerances& tol = kDefaultTolerances);

// Multiset of complex numbers with multiplicities, kept in canonical order:
// ascending real part, then ascending imaginary part.
class ComplexMultiset {
 public:
  struct Entry {
    Complex value;
    std::size_t multiplicity = 1;
  };

  ComplexMultiset() = default;

  // Values within `cluster_tol` of a cluster's first member join that cluster;
  // the cluster value is the mean of its members.
  static ComplexMultiset from_values(const std::vector<Complex>& values, double cluster_tol);

  [[nodiscard]] const std::vector<Entry>& entries() const noexcept { return entries_; }
  [[nodiscard]] std::size_t total_multiplicity() const noexcept;
  [[nodiscard]] std::vector<Complex> expanded() const;
  [[nodiscard]] bool empty() const noexcept { return entries_.empty(); }

 private:
  std::vector<Entry> entries_;
};

bool canonical_less(const Complex& a, const Complex& b) noexcept;

// Greedy nearest-neighbour matching of the expanded multisets in canonical
// order; returns the largest matched distance, or +inf when the total
// multiplicities differ.
double multiset_distance(const ComplexMultiset& a, const ComplexMultiset& b);

// Householder reduction to Hessenberg form followed by Francis double-shift
// QR. Throws NotSquare, DimensionOverflow, NoConvergence.
ComplexMultiset general_eigenvalues(const Matrix& m, const Tolerances& tol = kDefaultTolerances);

// Raw eigenvalues in the order deflation produced them.
std::vector<Complex> hessenberg_qr_eigenvalues(Matrix m);

// Orthonormal basis of ker(M^T) for a full-column-rank M (rows x n), returned
// as a rows x (rows - n) matrix. Throws RankDeficient.
Matrix null_complement_basis(const Matrix& m, const Tolerances& tol = kDefaultTolerances);

// Roots of u^2 + b u + c. Complex roots come back as an exact conjugate pair.
std::array<Complex, 2> quadratic_roots(double b, double c);

// Roots of u^4 + p u^2 + q, as +-sqrt of the roots of x^2 + p x + q.
std::array<Complex, 4> quartic_even_roots(double p, double q);

}  // namespace nbwalk::linalg
