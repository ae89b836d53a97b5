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

#include <cstddef>
#include <cstdint>
#include <vector>

#include "nbwalk/edge_space.hpp"
#include "nbwalk/graph.hpp"
#include "nbwalk/matrix.hpp"
#include "nbwalk/tolerances.hpp"

namespace nbwalk {

enum class Domain { Vertices, DirectedEdges };

// Nonnegative vector over vertices (length n) or directed edges (length 2m)
// summing to 1.
struct Distribution {
  Domain domain = Domain::Vertices;
  std::vector<double> values;

  [[nodiscard]] double mass() const noexcept;
};

// Validates sign and mass. Throws InvalidArgument.
Distribution make_distribution(Domain domain, std::vector<double> values,
                               const Tolerances& tol = kDefaultTolerances);
Distribution vertex_delta(const Graph& g, VertexId v);

// pi(v) = d_v / vol(G).
Distribution stationary_vertex(const Graph& g);
// Uniform 1/(2m) over directed edges.
Distribution stationary_edge(const Graph& g);

// f~((u,v)) = f(u) / d_u.
Distribution lift(const DirectedEdgeSpace& es, const Distribution& f);
// g(u) = sum over edges leaving u.
Distribution project(const DirectedEdgeSpace& es, const Distribution& f);

struct Propagation {
  Distribution vertex;
  Distribution edge;
};

// k sparse steps of f~ <- f~ P~ starting from lift(f0); O(k vol(G)).
Propagation propagate_exact(const DirectedEdgeSpace& es, const Distribution& f0, std::size_t k);

// Same walk through the dense P~; edge-domain input and output.
Distribution propagate_dense(const Matrix& p_tilde, const Distribution& edge_f0, std::size_t k);

// k-step vertex kernel: row u is the distribution after k non-backtracking
// steps from u. k = 1 gives D^-1 A.
Matrix nb_kernel(const DirectedEdgeSpace& es, std::size_t k);

// Trajectory v_0 = start, ..., v_steps. The first step picks among all d
// neighbours with rng.below(d); later steps draw rng.below(d - 1) and index
// the sorted neighbour list with the previous vertex skipped.
std::vector<VertexId> simulate(const Graph& g, VertexId start, std::size_t steps,
                               std::uint64_t seed);

// Endpoint frequencies of `walkers` independent walks; walker w is seeded with
// derive_seed(seed, w), so the result does not depend on `threads`.
Distribution monte_carlo_distribution(const Graph& g, VertexId start, std::size_t steps,
                                      std::size_t walkers, std::uint64_t seed,
                                      std::size_t threads = 1);

enum class StartMode {
  DirectedEdges,   // max over indicator starts chi_y, y a directed edge
  LiftedVertices,  // max over lift(delta_v)
};

struct ConvergenceSeries {
  StartMode mode = StartMode::DirectedEdges;
  double chi_squared_initial = 0.0;   // Delta'(0)
  std::vector<double> chi_squared;    // Delta'(t), t = 1..T at index t - 1
  std::vector<double> max_norm;       // max_v |f_t - pi|_inf over vertex starts
  std::vector<double> rate;           // Delta'(t)^(1/t)
  // exp of the least-squares slope of log Delta'(t) over t in [T/2, T],
  // ignoring values below kChiSquaredFloor.
  double tail_rate = 0.0;
};

inline constexpr double kChiSquaredFloor = 1e-12;

// Delta'(t) = max_y ( sum_x (P~^t(y,x) - pi~(x))^2 / pi~(x) )^(1/2).
ConvergenceSeries chi_squared_series(const DirectedEdgeSpace& es, std::size_t horizon,
                                     StartMode mode = StartMode::DirectedEdges);

struct ErgodicityReport {
  bool irreducible = false;
  std::size_t period = 1;  // of the strongly connected class of edge 0
  bool aperiodic = true;
  std::size_t reference_class_size = 0;
};

ErgodicityReport ergodicity_check(const DirectedEdgeSpace& es);

}  // namespace nbwalk
