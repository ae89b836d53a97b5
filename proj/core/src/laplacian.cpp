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

#include "nbwalk/laplacian.hpp"

#include <cmath>
#include <limits>

#include "nbwalk/error.hpp"
#include "nbwalk/linalg.hpp"

namespace nbwalk {
namespace {

double squared_norm(std::span<const double> f) {
  double acc = 0.0;
  for (double x : f) acc += x * x;
  return acc;
}

double require_nonzero(double norm2) {
  if (!(norm2 > 0.0)) throw Error(ErrorCode::ZeroVector, "Rayleigh quotient of the zero vector");
  return norm2;
}

}  // namespace

Matrix normalized_laplacian(const Graph& g) {
  const std::size_t n = g.vertex_count();
  Matrix lap = Matrix::identity(n);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v : g.neighbors(u)) {
      lap(u, v) = -1.0 / std::sqrt(static_cast<double>(g.degree(u) * g.degree(v)));
    }
  }
  return lap;
}

Matrix nb_directed_laplacian(const DirectedEdgeSpace& es) {
  const Matrix p = op_P_tilde(es);
  Matrix lap = Matrix::identity(es.size());
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = 0; j < es.size(); ++j) lap(i, j) -= 0.5 * (p(i, j) + p(j, i));
  }
  return lap;
}

Matrix nb_directed_laplacian(const Graph& g) { return nb_directed_laplacian(build_edge_space(g)); }

double rayleigh(const Matrix& laplacian, std::span<const double> f) {
  if (laplacian.rows() != laplacian.cols() || laplacian.rows() != f.size()) {
    throw Error(ErrorCode::DimensionMismatch, "rayleigh: vector length does not match matrix");
  }
  const double denom = require_nonzero(squared_norm(f));
  const std::vector<double> mf = laplacian * f;
  double num = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) num += f[i] * mf[i];
  return num / denom;
}

double rayleigh_edge_form(const DirectedEdgeSpace& es, std::span<const double> f) {
  if (f.size() != es.size()) {
    throw Error(ErrorCode::DimensionMismatch, "rayleigh_edge_form: expected an edge function");
  }
  const double denom = require_nonzero(squared_norm(f));
  const Graph& g = es.graph();
  double num = 0.0;
  for (EdgeIndex x = 0; x < es.size(); ++x) {
    const auto [u, v] = es.edge(x);
    const double p = 1.0 / static_cast<double>(g.degree(v) - 1);
    for (EdgeIndex y = es.outgoing_begin(v); y < es.outgoing_end(v); ++y) {
      if (es.edge(y).target == u) continue;
      const double diff = f[x] - f[y];
      num += diff * diff * p;
    }
  }
  return 0.5 * num / denom;
}

double vertex_rayleigh(const Graph& g, std::span<const double> f) {
  if (f.size() != g.vertex_count()) {
    throw Error(ErrorCode::DimensionMismatch, "vertex_rayleigh: expected a vertex function");
  }
  double num = 0.0;
  for (const auto& [u, v] : g.edges()) num += (f[u] - f[v]) * (f[u] - f[v]);
  double denom = 0.0;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    denom += f[u] * f[u] * static_cast<double>(g.degree(u));
  }
  return num / require_nonzero(denom);
}

std::vector<double> lift_vertex_function(const DirectedEdgeSpace& es, std::span<const double> f) {
  if (f.size() != es.graph().vertex_count()) {
    throw Error(ErrorCode::DimensionMismatch, "lift_vertex_function: expected a vertex function");
  }
  std::vector<double> out(es.size());
  for (EdgeIndex e = 0; e < es.size(); ++e) out[e] = f[es.edge(e).source];
  return out;
}

std::vector<double> lambda1_minimizer(const Graph& g, const Tolerances& tol) {
  const linalg::SymmetricEigen eig = linalg::symmetric_eigen(normalized_laplacian(g), tol);
  const std::size_t n = g.vertex_count();
  std::vector<double> f(n);
  for (VertexId u = 0; u < n; ++u) {
    f[u] = eig.vectors(u, 1) / std::sqrt(static_cast<double>(g.degree(u)));
  }
  return f;
}

LaplacianPair compare_lambda1(const Graph& g, const Tolerances& tol) {
  LaplacianPair pair;
  pair.L = normalized_laplacian(g);
  pair.L_tilde = nb_directed_laplacian(g);
  pair.spectrum_L = linalg::symmetric_eigen(pair.L, tol).values;
  pair.spectrum_L_tilde = linalg::symmetric_eigen(pair.L_tilde, tol).values;
  pair.lambda1_L = pair.spectrum_L.at(1);
  pair.lambda1_L_tilde = pair.spectrum_L_tilde.at(1);
  const double vol = static_cast<double>(g.volume());
  pair.chung_bound = pair.lambda1_L_tilde > tol.singular_pivot
                         ? 2.0 * std::log(vol) / pair.lambda1_L_tilde
                         : std::numeric_limits<double>::infinity();
  pair.inequality_ok = pair.lambda1_L_tilde <= pair.lambda1_L + kLaplacianSlack;
  return pair;
}

}  // namespace nbwalk
