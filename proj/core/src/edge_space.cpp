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

#include "nbwalk/edge_space.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nbwalk/error.hpp"
#include "nbwalk/linalg.hpp"

namespace nbwalk {

DirectedEdgeSpace::DirectedEdgeSpace(Graph g) : graph_(std::move(g)) {
  const std::size_t n = graph_.vertex_count();
  offsets_.assign(n + 1, 0);
  edges_.reserve(graph_.volume());
  for (VertexId u = 0; u < n; ++u) {
    offsets_[u] = edges_.size();
    for (VertexId v : graph_.neighbors(u)) edges_.push_back({u, v});
  }
  offsets_[n] = edges_.size();
  reversal_.resize(edges_.size());
  for (EdgeIndex e = 0; e < edges_.size(); ++e) {
    reversal_[e] = index(edges_[e].target, edges_[e].source);
  }
}

EdgeIndex DirectedEdgeSpace::index(VertexId u, VertexId v) const {
  const auto nbrs = graph_.neighbors(u);
  const auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v);
  if (it == nbrs.end() || *it != v) {
    throw Error(ErrorCode::UnknownVertex,
                "(" + graph_.label(u) + "," + graph_.label(v) + ") is not an edge");
  }
  return offsets_[u] + static_cast<EdgeIndex>(it - nbrs.begin());
}

DirectedEdgeSpace build_edge_space(const Graph& g) { return DirectedEdgeSpace(g); }

namespace {

// Fills M((u,v),(v,y)) = value(v) for every y != u.
template <typename ValueAt>
Matrix non_backtracking_operator(const DirectedEdgeSpace& es, ValueAt value_at) {
  const std::size_t size = es.size();
  Matrix m(size, size);
  for (EdgeIndex e = 0; e < size; ++e) {
    const auto [u, v] = es.edge(e);
    const double value = value_at(v);
    for (EdgeIndex f = es.outgoing_begin(v); f < es.outgoing_end(v); ++f) {
      if (es.edge(f).target != u) m(e, f) = value;
    }
  }
  return m;
}

template <typename ValueAt>
Matrix reversal_operator(const DirectedEdgeSpace& es, ValueAt value_at) {
  Matrix m(es.size(), es.size());
  for (EdgeIndex e = 0; e < es.size(); ++e) m(e, es.reverse(e)) = value_at(es.edge(e).target);
  return m;
}

}  // namespace

Matrix op_B(const DirectedEdgeSpace& es) {
  return non_backtracking_operator(es, [](VertexId) { return 1.0; });
}

Matrix op_P_tilde(const DirectedEdgeSpace& es) {
  const Graph& g = es.graph();
  return non_backtracking_operator(
      es, [&g](VertexId v) { return 1.0 / static_cast<double>(g.degree(v) - 1); });
}

Matrix op_S(const DirectedEdgeSpace& es) {
  Matrix s(es.size(), es.graph().vertex_count());
  for (EdgeIndex e = 0; e < es.size(); ++e) s(e, es.edge(e).target) = 1.0;
  return s;
}

Matrix op_T(const DirectedEdgeSpace& es) {
  Matrix t(es.graph().vertex_count(), es.size());
  for (EdgeIndex e = 0; e < es.size(); ++e) t(es.edge(e).source, e) = 1.0;
  return t;
}

Matrix op_tau(const DirectedEdgeSpace& es) {
  return reversal_operator(es, [](VertexId) { return 1.0; });
}

WeightAssignment WeightAssignment::unit(const Graph& g) {
  return WeightAssignment(std::vector<double>(g.vertex_count(), 1.0));
}

WeightAssignment WeightAssignment::degree_based(const Graph& g) {
  std::vector<double> values(g.vertex_count());
  for (VertexId v = 0; v < values.size(); ++v) {
    values[v] = 1.0 / std::sqrt(static_cast<double>(g.degree(v) - 1));
  }
  return WeightAssignment(std::move(values));
}

WeightAssignment WeightAssignment::from_values(std::vector<double> values) {
  for (std::size_t v = 0; v < values.size(); ++v) {
    if (!(values[v] > 0.0) || !std::isfinite(values[v])) {
      throw Error(ErrorCode::NonPositiveWeight, "vertex " + std::to_string(v));
    }
  }
  return WeightAssignment(std::move(values));
}

WeightAssignment parse_weights(std::string_view text, const Graph& g, WeightFallback fallback) {
  const WeightAssignment base = fallback == WeightFallback::Unit ? WeightAssignment::unit(g)
                                                                 : WeightAssignment::degree_based(g);
  std::vector<double> values(base.values().begin(), base.values().end());
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string label, extra;
    if (!(fields >> label)) continue;
    double weight = 0.0;
    if (!(fields >> weight) || (fields >> extra)) {
      throw Error(ErrorCode::MalformedLine,
                  "weights line " + std::to_string(line_no) + ": expected '<label> <weight>'");
    }
    const auto v = g.find(label);
    if (!v) {
      throw Error(ErrorCode::UnknownVertex,
                  "weights line " + std::to_string(line_no) + ": '" + label + "'");
    }
    if (!(weight > 0.0) || !std::isfinite(weight)) {
      throw Error(ErrorCode::NonPositiveWeight,
                  "weights line " + std::to_string(line_no) + ": vertex '" + label + "'");
    }
    values[*v] = weight;
  }
  return WeightAssignment::from_values(std::move(values));
}

EdgeOperatorSet op_weighted(const DirectedEdgeSpace& es, const WeightAssignment& w) {
  const Graph& g = es.graph();
  const std::size_t n = g.vertex_count();
  if (w.size() != n) {
    throw Error(ErrorCode::DimensionMismatch,
                "weights for " + std::to_string(w.size()) + " vertices, graph has " +
                    std::to_string(n));
  }
  auto w2 = [&w](VertexId v) { return w[v] * w[v]; };

  EdgeOperatorSet ops;
  ops.B = op_B(es);
  ops.tau = op_tau(es);
  ops.S = op_S(es);
  ops.T = op_T(es);
  ops.p_tilde = non_backtracking_operator(es, w2);
  ops.tau_tilde = reversal_operator(es, w2);

  ops.S_tilde = Matrix(es.size(), n);
  ops.T_tilde = Matrix(n, es.size());
  for (EdgeIndex e = 0; e < es.size(); ++e) {
    const auto [u, v] = es.edge(e);
    ops.S_tilde(e, v) = w[v];
    ops.T_tilde(u, e) = w[u];
  }

  ops.A_tilde = Matrix(n, n);
  ops.D_tilde = Matrix(n, n);
  for (VertexId x = 0; x < n; ++x) {
    for (VertexId v : g.neighbors(x)) {
      ops.A_tilde(x, v) = w[x] * w[v];
      ops.D_tilde(x, x) += w2(x) * w2(v);
    }
  }
  return ops;
}

std::vector<double> u_grid(double lo, double hi, std::size_t count) {
  if (count == 0) return {};
  if (count == 1) return {lo};
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
  }
  return out;
}

std::vector<double> default_u_grid() { return u_grid(-0.5, 0.5, 21); }

bool is_admissible_sample(const EdgeOperatorSet& ops, double u, const Tolerances& tol) {
  const std::size_t size = ops.tau_tilde.rows();
  const Matrix shifted = Matrix::identity(size) + u * ops.tau_tilde;
  return std::abs(linalg::lu_determinant(shifted)) > tol.singular_pivot;
}

IdentityReport verify_identities(const DirectedEdgeSpace& es, const WeightAssignment& w,
                                 std::span<const double> u_samples, const Tolerances& tol) {
  const Graph& g = es.graph();
  const EdgeOperatorSet ops = op_weighted(es, w);
  const Matrix A = adjacency_matrix(g);
  const Matrix D = degree_matrix(g);
  const Matrix W = Matrix::diagonal(w.values());
  const std::size_t size = es.size();
  const std::size_t n = g.vertex_count();
  const Matrix I_e = Matrix::identity(size);
  const Matrix I_v = Matrix::identity(n);

  IdentityReport report;
  auto record = [&report](std::string name, double residual) {
    report.residuals.push_back({std::move(name), residual});
  };

  const Matrix ST = ops.S * ops.T;
  const Matrix StTt = ops.S_tilde * ops.T_tilde;
  const Matrix tau_t2 = ops.tau_tilde * ops.tau_tilde;
  Matrix tau_t2_expected(size, size);
  for (EdgeIndex e = 0; e < size; ++e) {
    const auto [a, b] = es.edge(e);
    tau_t2_expected(e, e) = w[a] * w[a] * w[b] * w[b];
  }

  record("B = ST - tau", max_abs_diff(ops.B, ST - ops.tau));
  record("A = TS", max_abs_diff(A, ops.T * ops.S));
  record("D = T tau S", max_abs_diff(D, ops.T * ops.tau * ops.S));
  record("tau^2 = I", max_abs_diff(ops.tau * ops.tau, I_e));
  record("P~ = S~T~ - tau~", max_abs_diff(ops.p_tilde, StTt - ops.tau_tilde));
  record("T~S~ = WAW", max_abs_diff(ops.T_tilde * ops.S_tilde, W * A * W));
  record("A~ = WAW", max_abs_diff(ops.A_tilde, W * A * W));
  record("T~ tau~ S~ = D~", max_abs_diff(ops.T_tilde * ops.tau_tilde * ops.S_tilde, ops.D_tilde));
  record("tau~^2 = diag(w(u)^2 w(v)^2)", max_abs_diff(tau_t2, tau_t2_expected));

  double left_expansion = 0.0, right_expansion = 0.0, s_intertwine = 0.0, t_intertwine = 0.0;
  for (double u : u_samples) {
    if (!is_admissible_sample(ops, u, tol)) {
      ++report.samples_skipped;
      continue;
    }
    ++report.samples_used;
    const Matrix left = I_e - u * ops.p_tilde;
    const Matrix right = I_e - u * ops.tau_tilde;
    const Matrix left_product = left * right;
    const Matrix right_product = right * left;
    const Matrix expected_left = I_e - u * StTt + (u * u) * (StTt * ops.tau_tilde) - (u * u) * tau_t2;
    const Matrix expected_right = I_e - u * StTt + (u * u) * (ops.tau_tilde * StTt) - (u * u) * tau_t2;
    left_expansion = std::max(left_expansion, max_abs_diff(left_product, expected_left));
    right_expansion = std::max(right_expansion, max_abs_diff(right_product, expected_right));

    const Matrix vertex_side = I_v - u * ops.A_tilde + (u * u) * ops.D_tilde;
    s_intertwine = std::max(s_intertwine, max_abs_diff((left_product + (u * u) * tau_t2) * ops.S_tilde,
                                                       ops.S_tilde * vertex_side));
    t_intertwine = std::max(t_intertwine, max_abs_diff(ops.T_tilde * (right_product + (u * u) * tau_t2),
                                                       vertex_side * ops.T_tilde));
  }
  record("(I-uP~)(I-u tau~) expansion", left_expansion);
  record("(I-u tau~)(I-uP~) expansion", right_expansion);
  record("S~ intertwining", s_intertwine);
  record("T~ intertwining", t_intertwine);

  for (const auto& r : report.residuals) report.max_residual = std::max(report.max_residual, r.residual);
  report.passed = report.max_residual < tol.operator_identity;
  return report;
}

}  // namespace nbwalk
