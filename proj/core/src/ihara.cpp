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

#include "nbwalk/ihara.hpp"

#include <algorithm>
#include <cmath>

#include "nbwalk/error.hpp"
#include "nbwalk/linalg.hpp"

namespace nbwalk {
namespace {

IharaReport finish(std::vector<IharaSample> samples, const Tolerances& tol) {
  std::sort(samples.begin(), samples.end(),
            [](const IharaSample& a, const IharaSample& b) { return a.u < b.u; });
  IharaReport report{std::move(samples), 0.0, false};
  for (const auto& s : report.samples) report.max_residual = std::max(report.max_residual, s.residual);
  report.passed = report.max_residual < tol.identity_residual;
  return report;
}

}  // namespace

double relative_residual(double lhs, double rhs) noexcept {
  return std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

IharaReport unweighted_check(const Graph& g, std::span<const double> u_samples,
                             const Tolerances& tol) {
  const DirectedEdgeSpace es(g);
  const Matrix B = op_B(es);
  const Matrix A = adjacency_matrix(g);
  const Matrix D = degree_matrix(g);
  const std::size_t n = g.vertex_count();
  const Matrix I_e = Matrix::identity(es.size());
  const Matrix I_v = Matrix::identity(n);
  const auto excess = static_cast<int>(g.edge_count()) - static_cast<int>(n);

  std::vector<IharaSample> samples;
  samples.reserve(u_samples.size());
  for (double u : u_samples) {
    const double lhs = linalg::lu_determinant(I_e - u * B);
    // std::pow(0, 0) == 1 covers u = +-1 when m == n.
    const double rhs = std::pow(1.0 - u * u, excess) *
                       linalg::lu_determinant(I_v - u * A + (u * u) * (D - I_v));
    samples.push_back({u, lhs, rhs, relative_residual(lhs, rhs)});
  }
  return finish(std::move(samples), tol);
}

IharaReport weighted_check(const EdgeOperatorSet& ops, std::span<const double> u_samples,
                           const Tolerances& tol) {
  const std::size_t size = ops.p_tilde.rows();
  const std::size_t n = ops.A_tilde.rows();
  const Matrix I_e = Matrix::identity(size);
  const Matrix I_v = Matrix::identity(n);
  const Matrix tau2 = ops.tau_tilde * ops.tau_tilde;

  std::vector<IharaSample> samples;
  samples.reserve(u_samples.size());
  for (double u : u_samples) {
    const Matrix edge_side = (I_e - u * ops.p_tilde) * (I_e - u * ops.tau_tilde) + (u * u) * tau2;
    const double lhs = linalg::lu_determinant(edge_side);
    const double rhs = linalg::lu_determinant(I_v - u * ops.A_tilde + (u * u) * ops.D_tilde);
    samples.push_back({u, lhs, rhs, relative_residual(lhs, rhs)});
  }
  return finish(std::move(samples), tol);
}

IharaReport weighted_check(const Graph& g, const WeightAssignment& w,
                           std::span<const double> u_samples, const Tolerances& tol) {
  const DirectedEdgeSpace es(g);
  return weighted_check(op_weighted(es, w), u_samples, tol);
}

DecompositionReport decomposition_check(const Graph& g, const WeightAssignment& w, double u,
                                        const Tolerances& tol) {
  const DirectedEdgeSpace es(g);
  const EdgeOperatorSet ops = op_weighted(es, w);
  const std::size_t size = es.size();
  const std::size_t n = g.vertex_count();
  const std::size_t rest = size - n;

  const Matrix R = linalg::null_complement_basis(ops.S_tilde, tol);
  const Matrix M = hconcat(ops.S_tilde, R);
  Matrix M_inv;
  try {
    M_inv = linalg::inverse(M);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SingularMatrix) throw;
    throw Error(ErrorCode::SingularChangeOfBasis, "[S~ R] is not invertible");
  }

  const Matrix I_e = Matrix::identity(size);
  const Matrix I_v = Matrix::identity(n);
  const Matrix tau2 = ops.tau_tilde * ops.tau_tilde;
  const Matrix X = (I_e - u * ops.p_tilde) * (I_e - u * ops.tau_tilde) + (u * u) * tau2;
  const Matrix Y = M_inv * X * M;

  DecompositionReport report;
  report.u = u;
  const Matrix vertex_side = I_v - u * ops.A_tilde + (u * u) * ops.D_tilde;
  const Matrix coupling = (-u) * (ops.T_tilde * R) + (u * u) * (ops.T_tilde * ops.tau_tilde * R);
  report.upper_left_deviation = max_abs_diff(Y.block(0, 0, n, n), vertex_side);
  report.upper_right_deviation = max_abs_diff(Y.block(0, n, n, rest), coupling);
  report.lower_left_norm = Y.block(n, 0, rest, n).max_abs();
  report.lower_right_deviation = max_abs_diff(Y.block(n, n, rest, rest), Matrix::identity(rest));

  const Matrix St = ops.S_tilde.transpose();
  const Matrix Rt = R.transpose();
  const Matrix top = linalg::inverse(St * ops.S_tilde) * St;
  const Matrix bottom = linalg::inverse(Rt * R) * Rt;
  Matrix explicit_inverse(size, size);
  for (std::size_t c = 0; c < size; ++c) {
    for (std::size_t r = 0; r < n; ++r) explicit_inverse(r, c) = top(r, c);
    for (std::size_t r = 0; r < rest; ++r) explicit_inverse(n + r, c) = bottom(r, c);
  }
  report.explicit_inverse_deviation = max_abs_diff(explicit_inverse * M, I_e);

  report.passed = std::max({report.lower_left_norm, report.lower_right_deviation,
                            report.upper_left_deviation, report.upper_right_deviation,
                            report.explicit_inverse_deviation}) < tol.identity_residual;
  return report;
}

}  // namespace nbwalk
