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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nbwalk/graph.hpp"
#include "nbwalk/matrix.hpp"
#include "nbwalk/tolerances.hpp"

namespace nbwalk {

using EdgeIndex = std::size_t;

struct DirectedEdge {
  VertexId source = 0;
  VertexId target = 0;
  friend bool operator==(const DirectedEdge&, const DirectedEdge&) = default;
};

// The 2m orientations of the edges of a graph, ordered by source id and then
// target id. Every matrix over directed edges uses this ordering.
class DirectedEdgeSpace {
 public:
  explicit DirectedEdgeSpace(Graph g);

  [[nodiscard]] const Graph& graph() const noexcept { return graph_; }
  [[nodiscard]] std::size_t size() const noexcept { return edges_.size(); }
  [[nodiscard]] const DirectedEdge& edge(EdgeIndex e) const { return edges_.at(e); }
  [[nodiscard]] const std::vector<DirectedEdge>& edges() const noexcept { return edges_; }

  // Throws UnknownVertex when (u, v) is not an edge.
  [[nodiscard]] EdgeIndex index(VertexId u, VertexId v) const;
  [[nodiscard]] EdgeIndex reverse(EdgeIndex e) const { return reversal_.at(e); }

  // Edges leaving u occupy [outgoing_begin(u), outgoing_end(u)).
  [[nodiscard]] EdgeIndex outgoing_begin(VertexId u) const { return offsets_.at(u); }
  [[nodiscard]] EdgeIndex outgoing_end(VertexId u) const { return offsets_.at(u + 1); }

 private:
  Graph graph_;
  std::vector<DirectedEdge> edges_;
  std::vector<EdgeIndex> offsets_;
  std::vector<EdgeIndex> reversal_;
};

DirectedEdgeSpace build_edge_space(const Graph& g);

// B((u,v),(x,y)) = 1 iff v = x and y != u.
Matrix op_B(const DirectedEdgeSpace& es);
// Non-backtracking transition matrix: 1/(d_v - 1) where B is 1.
Matrix op_P_tilde(const DirectedEdgeSpace& es);
// Endpoint incidence, 2m x n: S((u,v), x) = 1 iff v = x.
Matrix op_S(const DirectedEdgeSpace& es);
// Starting-point incidence, n x 2m: T(x, (u,v)) = 1 iff u = x.
Matrix op_T(const DirectedEdgeSpace& es);
// Reversal involution (u,v) <-> (v,u).
Matrix op_tau(const DirectedEdgeSpace& es);

// Positive per-vertex weights.
class WeightAssignment {
 public:
  static WeightAssignment unit(const Graph& g);
  // w(x) = 1/sqrt(d_x - 1); turns the weighted P~ into the transition matrix.
  static WeightAssignment degree_based(const Graph& g);
  // Throws NonPositiveWeight.
  static WeightAssignment from_values(std::vector<double> values);

  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
  [[nodiscard]] double operator[](VertexId v) const { return values_.at(v); }
  [[nodiscard]] std::span<const double> values() const noexcept { return values_; }

 private:
  explicit WeightAssignment(std::vector<double> values) : values_(std::move(values)) {}
  std::vector<double> values_;
};

enum class WeightFallback { Unit, Degree };

// Weight file: "<vertex-label> <positive-real>" per line, '#' comments.
// Vertices not listed get the fallback weight.
WeightAssignment parse_weights(std::string_view text, const Graph& g, WeightFallback fallback);

struct EdgeOperatorSet {
  Matrix B;          // unweighted, 2m x 2m
  Matrix p_tilde;    // weighted: w(b)^2 on (a,b) -> (b,d), d != a
  Matrix tau;        // unweighted reversal
  Matrix tau_tilde;  // w(b)^2 on (a,b) -> (b,a)
  Matrix S, T;
  Matrix S_tilde;    // S W
  Matrix T_tilde;    // W T
  Matrix A_tilde;    // W A W
  Matrix D_tilde;    // diag(sum_{v~x} w(x)^2 w(v)^2)
};

// Throws DimensionMismatch when the weight count differs from n.
EdgeOperatorSet op_weighted(const DirectedEdgeSpace& es, const WeightAssignment& w);

// `count` evenly spaced points in [lo, hi].
std::vector<double> u_grid(double lo, double hi, std::size_t count);
// 21 points in [-0.5, 0.5].
std::vector<double> default_u_grid();

// False when I + u tau~ is numerically singular.
bool is_admissible_sample(const EdgeOperatorSet& ops, double u,
                          const Tolerances& tol = kDefaultTolerances);

struct IdentityResidual {
  std::string name;
  double residual = 0.0;  // max-norm of lhs - rhs (max over u for u-dependent identities)
};

struct IdentityReport {
  std::vector<IdentityResidual> residuals;
  double max_residual = 0.0;
  std::size_t samples_used = 0;
  std::size_t samples_skipped = 0;
  bool passed = false;
};

// Checks every algebraic identity linking the edge and vertex operators.
IdentityReport verify_identities(const DirectedEdgeSpace& es, const WeightAssignment& w,
                                 std::span<const double> u_samples,
                                 const Tolerances& tol = kDefaultTolerances);

}  // namespace nbwalk
