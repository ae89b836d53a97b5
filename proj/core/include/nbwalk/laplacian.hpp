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
#include "nbwalk/matrix.hpp"
#include "nbwalk/tolerances.hpp"

namespace nbwalk {

// I - D^-1/2 A D^-1/2.
Matrix normalized_laplacian(const Graph& g);

// I - (P~ + P~^T) / 2 on the directed edge space. The Perron vector of P~ is
// constant, so no further symmetrization is needed.
Matrix nb_directed_laplacian(const DirectedEdgeSpace& es);
Matrix nb_directed_laplacian(const Graph& g);

// f^T M f / f^T f. Throws ZeroVector or DimensionMismatch.
double rayleigh(const Matrix& laplacian, std::span<const double> f);

// 1/2 sum over (u,v),(v,w) of (f(u,v) - f(v,w))^2 P~((u,v),(v,w)), divided by
// sum f^2. Equals rayleigh(nb_directed_laplacian, f).
double rayleigh_edge_form(const DirectedEdgeSpace& es, std::span<const double> f);

// sum over edges of (f(u) - f(v))^2 divided by sum of f(u)^2 d_u: the
// quotient of the normalized Laplacian written in the f = D^-1/2 g variable.
double vertex_rayleigh(const Graph& g, std::span<const double> f);

// f'(u,v) = f(u).
std::vector<double> lift_vertex_function(const DirectedEdgeSpace& es, std::span<const double> f);

// D^-1/2 g for the eigenvector g of lambda_1(L); satisfies sum f(u) d_u = 0.
std::vector<double> lambda1_minimizer(const Graph& g, const Tolerances& tol = kDefaultTolerances);

inline constexpr double kLaplacianSlack = 1e-9;

struct LaplacianPair {
  Matrix L;
  Matrix L_tilde;
  std::vector<double> spectrum_L;        // ascending
  std::vector<double> spectrum_L_tilde;  // ascending
  double lambda1_L = 0.0;
  double lambda1_L_tilde = 0.0;
  double chung_bound = 0.0;  // 2 log(vol G) / lambda1(L~); infinite if lambda1(L~) = 0
  bool inequality_ok = false;
};

// Second-smallest eigenvalues of L and L~ and the comparison
// lambda1(L~) <= lambda1(L) + kLaplacianSlack.
LaplacianPair compare_lambda1(const Graph& g, const Tolerances& tol = kDefaultTolerances);

}  // namespace nbwalk
