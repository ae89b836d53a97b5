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

#include "nbwalk/walks.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <thread>

#include "nbwalk/error.hpp"
#include "nbwalk/rng.hpp"

namespace nbwalk {
namespace {

void require_domain(const Distribution& f, Domain domain, std::size_t size, const char* what) {
  if (f.domain != domain || f.values.size() != size) {
    throw Error(ErrorCode::DimensionMismatch, std::string(what) + ": wrong domain or length");
  }
}

// One step f~ <- f~ P~ using the successor structure of the edge space.
void step(const DirectedEdgeSpace& es, const std::vector<double>& current, std::vector<double>& next) {
  const Graph& g = es.graph();
  std::fill(next.begin(), next.end(), 0.0);
  for (EdgeIndex e = 0; e < es.size(); ++e) {
    const double mass = current[e];
    if (mass == 0.0) continue;
    const auto [u, v] = es.edge(e);
    const double share = mass / static_cast<double>(g.degree(v) - 1);
    for (EdgeIndex f = es.outgoing_begin(v); f < es.outgoing_end(v); ++f) {
      if (es.edge(f).target != u) next[f] += share;
    }
  }
}

std::vector<double> project_values(const DirectedEdgeSpace& es, const std::vector<double>& edge) {
  const std::size_t n = es.graph().vertex_count();
  std::vector<double> out(n, 0.0);
  for (VertexId u = 0; u < n; ++u)
    for (EdgeIndex e = es.outgoing_begin(u); e < es.outgoing_end(u); ++e) out[u] += edge[e];
  return out;
}

// Draws the successor of `current` uniformly among its neighbours other than
// `previous`, indexing the sorted neighbour list with `previous` skipped.
VertexId nb_step(const Graph& g, VertexId previous, VertexId current, SplitMix64& rng) {
  const auto nbrs = g.neighbors(current);
  auto pick = static_cast<std::size_t>(rng.below(nbrs.size() - 1));
  const auto prev_pos = static_cast<std::size_t>(
      std::lower_bound(nbrs.begin(), nbrs.end(), previous) - nbrs.begin());
  if (pick >= prev_pos) ++pick;
  return nbrs[pick];
}

VertexId walk_endpoint(const Graph& g, VertexId start, std::size_t steps, SplitMix64& rng) {
  VertexId previous = start;
  const auto first = g.neighbors(start);
  VertexId current = first[rng.below(first.size())];
  for (std::size_t i = 1; i < steps; ++i) {
    const VertexId next = nb_step(g, previous, current, rng);
    previous = current;
    current = next;
  }
  return current;
}

}  // namespace

double Distribution::mass() const noexcept {
  return std::accumulate(values.begin(), values.end(), 0.0);
}

Distribution make_distribution(Domain domain, std::vector<double> values, const Tolerances& tol) {
  for (double v : values) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw Error(ErrorCode::InvalidArgument, "distribution entries must be nonnegative");
    }
  }
  Distribution f{domain, std::move(values)};
  if (std::abs(f.mass() - 1.0) > tol.distribution_mass) {
    throw Error(ErrorCode::InvalidArgument, "distribution does not sum to 1");
  }
  return f;
}

Distribution vertex_delta(const Graph& g, VertexId v) {
  if (v >= g.vertex_count()) throw Error(ErrorCode::UnknownVertex, "vertex out of range");
  std::vector<double> values(g.vertex_count(), 0.0);
  values[v] = 1.0;
  return {Domain::Vertices, std::move(values)};
}

Distribution stationary_vertex(const Graph& g) {
  std::vector<double> values(g.vertex_count());
  const auto vol = static_cast<double>(g.volume());
  for (VertexId v = 0; v < values.size(); ++v) values[v] = static_cast<double>(g.degree(v)) / vol;
  return {Domain::Vertices, std::move(values)};
}

Distribution stationary_edge(const Graph& g) {
  return {Domain::DirectedEdges,
          std::vector<double>(g.volume(), 1.0 / static_cast<double>(g.volume()))};
}

Distribution lift(const DirectedEdgeSpace& es, const Distribution& f) {
  const Graph& g = es.graph();
  require_domain(f, Domain::Vertices, g.vertex_count(), "lift");
  std::vector<double> values(es.size());
  for (EdgeIndex e = 0; e < es.size(); ++e) {
    const VertexId u = es.edge(e).source;
    values[e] = f.values[u] / static_cast<double>(g.degree(u));
  }
  return {Domain::DirectedEdges, std::move(values)};
}

Distribution project(const DirectedEdgeSpace& es, const Distribution& f) {
  require_domain(f, Domain::DirectedEdges, es.size(), "project");
  return {Domain::Vertices, project_values(es, f.values)};
}

Propagation propagate_exact(const DirectedEdgeSpace& es, const Distribution& f0, std::size_t k) {
  Distribution edge = lift(es, f0);
  std::vector<double> scratch(es.size());
  for (std::size_t i = 0; i < k; ++i) {
    step(es, edge.values, scratch);
    edge.values.swap(scratch);
  }
  if (k == 0) return {f0, std::move(edge)};
  return {project(es, edge), std::move(edge)};
}

Distribution propagate_dense(const Matrix& p_tilde, const Distribution& edge_f0, std::size_t k) {
  require_domain(edge_f0, Domain::DirectedEdges, p_tilde.rows(), "propagate_dense");
  std::vector<double> values = edge_f0.values;
  for (std::size_t i = 0; i < k; ++i) values = left_multiply(values, p_tilde);
  return {Domain::DirectedEdges, std::move(values)};
}

Matrix nb_kernel(const DirectedEdgeSpace& es, std::size_t k) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "nb_kernel needs k >= 1");
  const Graph& g = es.graph();
  const std::size_t n = g.vertex_count();
  Matrix kernel(n, n);
  for (VertexId u = 0; u < n; ++u) {
    const Propagation p = propagate_exact(es, vertex_delta(g, u), k);
    for (VertexId v = 0; v < n; ++v) kernel(u, v) = p.vertex.values[v];
  }
  return kernel;
}

std::vector<VertexId> simulate(const Graph& g, VertexId start, std::size_t steps,
                               std::uint64_t seed) {
  if (start >= g.vertex_count()) throw Error(ErrorCode::UnknownVertex, "start vertex out of range");
  if (steps == 0) throw Error(ErrorCode::InvalidArgument, "simulate needs steps >= 1");
  SplitMix64 rng(seed);
  std::vector<VertexId> path;
  path.reserve(steps + 1);
  path.push_back(start);
  const auto first = g.neighbors(start);
  path.push_back(first[rng.below(first.size())]);
  for (std::size_t i = 1; i < steps; ++i) {
    path.push_back(nb_step(g, path[path.size() - 2], path.back(), rng));
  }
  return path;
}

Distribution monte_carlo_distribution(const Graph& g, VertexId start, std::size_t steps,
                                      std::size_t walkers, std::uint64_t seed,
                                      std::size_t threads) {
  if (start >= g.vertex_count()) throw Error(ErrorCode::UnknownVertex, "start vertex out of range");
  if (walkers == 0) throw Error(ErrorCode::InvalidArgument, "need at least one walker");
  if (steps == 0) throw Error(ErrorCode::InvalidArgument, "monte carlo needs steps >= 1");
  const std::size_t n = g.vertex_count();
  threads = std::clamp<std::size_t>(threads, 1, walkers);

  std::vector<std::vector<std::uint64_t>> counts(threads, std::vector<std::uint64_t>(n, 0));
  auto run_shard = [&](std::size_t shard) {
    const std::size_t begin = walkers * shard / threads;
    const std::size_t end = walkers * (shard + 1) / threads;
    auto& local = counts[shard];
    for (std::size_t w = begin; w < end; ++w) {
      SplitMix64 rng(derive_seed(seed, w));
      ++local[walk_endpoint(g, start, steps, rng)];
    }
  };
  if (threads == 1) {
    run_shard(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(run_shard, t);
  }

  std::vector<double> values(n, 0.0);
  for (VertexId v = 0; v < n; ++v) {
    std::uint64_t total = 0;
    for (const auto& local : counts) total += local[v];
    values[v] = static_cast<double>(total) / static_cast<double>(walkers);
  }
  return {Domain::Vertices, std::move(values)};
}

ConvergenceSeries chi_squared_series(const DirectedEdgeSpace& es, std::size_t horizon,
                                     StartMode mode) {
  const Graph& g = es.graph();
  const std::size_t size = es.size();
  const std::size_t n = g.vertex_count();
  const double uniform = 1.0 / static_cast<double>(size);
  const std::vector<double> pi = stationary_vertex(g).values;

  auto chi = [&](const std::vector<double>& row) {
    double acc = 0.0;
    for (double x : row) acc += (x - uniform) * (x - uniform);
    return std::sqrt(acc * static_cast<double>(size));
  };

  ConvergenceSeries series;
  series.mode = mode;
  series.chi_squared.assign(horizon, 0.0);
  series.max_norm.assign(horizon, 0.0);
  series.rate.assign(horizon, 0.0);

  std::vector<std::vector<double>> starts;
  if (mode == StartMode::DirectedEdges) {
    for (EdgeIndex y = 0; y < size; ++y) {
      std::vector<double> row(size, 0.0);
      row[y] = 1.0;
      starts.push_back(std::move(row));
    }
  } else {
    for (VertexId v = 0; v < n; ++v) starts.push_back(lift(es, vertex_delta(g, v)).values);
  }

  std::vector<double> scratch(size);
  for (auto row : starts) {
    series.chi_squared_initial = std::max(series.chi_squared_initial, chi(row));
    for (std::size_t t = 0; t < horizon; ++t) {
      step(es, row, scratch);
      row.swap(scratch);
      series.chi_squared[t] = std::max(series.chi_squared[t], chi(row));
    }
  }

  for (VertexId v = 0; v < n; ++v) {
    std::vector<double> row = lift(es, vertex_delta(g, v)).values;
    for (std::size_t t = 0; t < horizon; ++t) {
      step(es, row, scratch);
      row.swap(scratch);
      const std::vector<double> f = project_values(es, row);
      double worst = 0.0;
      for (VertexId x = 0; x < n; ++x) worst = std::max(worst, std::abs(f[x] - pi[x]));
      series.max_norm[t] = std::max(series.max_norm[t], worst);
    }
  }

  for (std::size_t t = 0; t < horizon; ++t) {
    series.rate[t] = std::pow(series.chi_squared[t], 1.0 / static_cast<double>(t + 1));
  }

  // Least-squares slope of log Delta'(t) on the tail half.
  double sum_t = 0.0, sum_y = 0.0, sum_tt = 0.0, sum_ty = 0.0;
  std::size_t count = 0;
  for (std::size_t t = horizon / 2; t <= horizon && t >= 1; ++t) {
    const double value = series.chi_squared[t - 1];
    if (value < kChiSquaredFloor) continue;
    const double x = static_cast<double>(t);
    const double y = std::log(value);
    sum_t += x;
    sum_y += y;
    sum_tt += x * x;
    sum_ty += x * y;
    ++count;
  }
  if (count >= 2) {
    const double denom = static_cast<double>(count) * sum_tt - sum_t * sum_t;
    const double slope = (static_cast<double>(count) * sum_ty - sum_t * sum_y) / denom;
    series.tail_rate = std::exp(slope);
  }
  return series;
}

ErgodicityReport ergodicity_check(const DirectedEdgeSpace& es) {
  const std::size_t size = es.size();
  std::vector<std::vector<EdgeIndex>> successors(size), predecessors(size);
  for (EdgeIndex e = 0; e < size; ++e) {
    const auto [u, v] = es.edge(e);
    for (EdgeIndex f = es.outgoing_begin(v); f < es.outgoing_end(v); ++f) {
      if (es.edge(f).target != u) {
        successors[e].push_back(f);
        predecessors[f].push_back(e);
      }
    }
  }

  auto reach = [size](const std::vector<std::vector<EdgeIndex>>& arcs) {
    std::vector<bool> seen(size, false);
    std::queue<EdgeIndex> frontier;
    frontier.push(0);
    seen[0] = true;
    while (!frontier.empty()) {
      const EdgeIndex e = frontier.front();
      frontier.pop();
      for (EdgeIndex f : arcs[e]) {
        if (!seen[f]) {
          seen[f] = true;
          frontier.push(f);
        }
      }
    }
    return seen;
  };
  const std::vector<bool> forward = reach(successors);
  const std::vector<bool> backward = reach(predecessors);

  ErgodicityReport report;
  std::vector<bool> in_class(size);
  for (EdgeIndex e = 0; e < size; ++e) {
    in_class[e] = forward[e] && backward[e];
    if (in_class[e]) ++report.reference_class_size;
  }
  report.irreducible = report.reference_class_size == size;

  // BFS levels inside the class; the period is the gcd of level[x] + 1 - level[y]
  // over all arcs x -> y within the class.
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> level(size, kUnvisited);
  std::queue<EdgeIndex> frontier;
  level[0] = 0;
  frontier.push(0);
  std::size_t period = 0;
  while (!frontier.empty()) {
    const EdgeIndex e = frontier.front();
    frontier.pop();
    for (EdgeIndex f : successors[e]) {
      if (!in_class[f]) continue;
      if (level[f] == kUnvisited) {
        level[f] = level[e] + 1;
        frontier.push(f);
      } else {
        const auto diff = static_cast<long long>(level[e] + 1) - static_cast<long long>(level[f]);
        period = std::gcd(period, static_cast<std::size_t>(std::llabs(diff)));
      }
    }
  }
  report.period = period == 0 ? 1 : period;
  report.aperiodic = report.period == 1;
  return report;
}

}  // namespace nbwalk
