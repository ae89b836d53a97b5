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

// Reference implementations used only by the tests. They favour directness
// over speed and share no numerical code with the library.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "nbwalk/graph.hpp"
#include "nbwalk/linalg.hpp"
#include "nbwalk/matrix.hpp"

namespace oracle {

using LMatrix = std::vector<std::vector<long double>>;
using LComplex = std::complex<long double>;

inline LMatrix to_long(const nbwalk::Matrix& m) {
  LMatrix out(m.rows(), std::vector<long double>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

inline LMatrix multiply(const LMatrix& a, const LMatrix& b) {
  const std::size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
  LMatrix out(n, std::vector<long double>(p, 0.0L));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0.0L) continue;
      for (std::size_t j = 0; j < p; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

// Gaussian elimination with complete pivoting in extended precision.
inline long double determinant(LMatrix a) {
  const std::size_t n = a.size();
  long double det = 1.0L;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pr = k, pc = k;
    for (std::size_t i = k; i < n; ++i)
      for (std::size_t j = k; j < n; ++j)
        if (std::fabs(a[i][j]) > std::fabs(a[pr][pc])) pr = i, pc = j;
    if (a[pr][pc] == 0.0L) return 0.0L;
    if (pr != k) std::swap(a[pr], a[k]), det = -det;
    if (pc != k) {
      for (auto& row : a) std::swap(row[pc], row[k]);
      det = -det;
    }
    det *= a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const long double f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return det;
}

inline long double determinant(const nbwalk::Matrix& m) { return determinant(to_long(m)); }

// trace(M^j) for j = 1..count: the power sums of the eigenvalues, which fix
// the spectrum as a multiset.
inline std::vector<long double> power_traces(const nbwalk::Matrix& m, std::size_t count) {
  const LMatrix base = to_long(m);
  LMatrix power = base;
  std::vector<long double> out;
  for (std::size_t j = 1; j <= count; ++j) {
    long double tr = 0.0L;
    for (std::size_t i = 0; i < power.size(); ++i) tr += power[i][i];
    out.push_back(tr);
    if (j < count) power = multiply(power, base);
  }
  return out;
}

inline std::vector<LComplex> multiset_power_sums(const nbwalk::linalg::ComplexMultiset& set,
                                                 std::size_t count) {
  std::vector<LComplex> out(count, LComplex(0.0L, 0.0L));
  for (const auto& entry : set.entries()) {
    const LComplex z(entry.value.real(), entry.value.imag());
    LComplex zj = 1.0L;
    for (std::size_t j = 0; j < count; ++j) {
      zj *= z;
      out[j] += static_cast<long double>(entry.multiplicity) * zj;
    }
  }
  return out;
}

// Largest deviation between trace(M^j) and the power sums of `set`.
inline long double power_sum_mismatch(const nbwalk::Matrix& m,
                                      const nbwalk::linalg::ComplexMultiset& set,
                                      std::size_t count) {
  const auto traces = power_traces(m, count);
  const auto sums = multiset_power_sums(set, count);
  long double worst = 0.0L;
  for (std::size_t j = 0; j < count; ++j) worst = std::max(worst, std::abs(sums[j] - traces[j]));
  return worst;
}

// Number of non-backtracking walks of exactly k steps from u to v, by
// exhaustive depth-first enumeration.
inline std::uint64_t count_nb_walks(const nbwalk::Graph& g, nbwalk::VertexId u, nbwalk::VertexId v,
                                    std::size_t k) {
  std::function<std::uint64_t(nbwalk::VertexId, nbwalk::VertexId, std::size_t)> go =
      [&](nbwalk::VertexId prev, nbwalk::VertexId cur, std::size_t left) -> std::uint64_t {
    if (left == 0) return cur == v ? 1 : 0;
    std::uint64_t total = 0;
    for (nbwalk::VertexId next : g.neighbors(cur))
      if (next != prev) total += go(cur, next, left - 1);
    return total;
  };
  std::uint64_t total = 0;
  if (k == 0) return u == v ? 1 : 0;
  for (nbwalk::VertexId first : g.neighbors(u)) total += go(u, first, k - 1);
  return total;
}

// Probability that the non-backtracking random walk from u sits at v after k
// steps, summing path probabilities over every walk.
inline long double nb_walk_probability(const nbwalk::Graph& g, nbwalk::VertexId u,
                                       nbwalk::VertexId v, std::size_t k) {
  std::function<long double(nbwalk::VertexId, nbwalk::VertexId, std::size_t)> go =
      [&](nbwalk::VertexId prev, nbwalk::VertexId cur, std::size_t left) -> long double {
    if (left == 0) return cur == v ? 1.0L : 0.0L;
    long double total = 0.0L;
    const long double p = 1.0L / static_cast<long double>(g.degree(cur) - 1);
    for (nbwalk::VertexId next : g.neighbors(cur))
      if (next != prev) total += p * go(cur, next, left - 1);
    return total;
  };
  if (k == 0) return u == v ? 1.0L : 0.0L;
  long double total = 0.0L;
  const long double p = 1.0L / static_cast<long double>(g.degree(u));
  for (nbwalk::VertexId first : g.neighbors(u)) total += p * go(u, first, k - 1);
  return total;
}

// gcd of the lengths t <= max_length of closed non-backtracking walks that
// start and end on the directed edge (u, v), found by stepping a reachability
// set forward.
inline std::size_t closed_walk_gcd(const nbwalk::Graph& g, nbwalk::VertexId u, nbwalk::VertexId v,
                                   std::size_t max_length) {
  using Arc = std::pair<nbwalk::VertexId, nbwalk::VertexId>;
  std::vector<Arc> frontier{{u, v}};
  std::size_t result = 0;
  for (std::size_t t = 1; t <= max_length; ++t) {
    std::vector<Arc> next;
    for (const auto& [a, b] : frontier)
      for (nbwalk::VertexId c : g.neighbors(b))
        if (c != a) next.emplace_back(b, c);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    if (std::binary_search(next.begin(), next.end(), Arc{u, v})) result = std::gcd(result, t);
    frontier = std::move(next);
  }
  return result;
}

// Real roots of a x^3 + b x^2 + c x + d with one real root (negative
// discriminant), plus the complex pair, via Cardano's formula.
inline std::vector<LComplex> cubic_roots(long double a, long double b, long double c,
                                         long double d) {
  const long double p = (3 * a * c - b * b) / (3 * a * a);
  const long double q = (2 * b * b * b - 9 * a * b * c + 27 * a * a * d) / (27 * a * a * a);
  const long double disc = q * q / 4 + p * p * p / 27;
  const long double s = std::cbrt(-q / 2 + std::sqrt(disc));
  const long double t = std::cbrt(-q / 2 - std::sqrt(disc));
  const long double shift = -b / (3 * a);
  const LComplex omega(-0.5L, std::sqrt(3.0L) / 2);
  return {LComplex(s + t + shift, 0), omega * s + std::conj(omega) * t + shift,
          std::conj(omega) * s + omega * t + shift};
}

inline nbwalk::Matrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng,
                                    double lo = -1.0, double hi = 1.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  nbwalk::Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

inline std::vector<double> random_vector(std::size_t n, std::mt19937_64& rng, double lo = -1.0,
                                         double hi = 1.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> v(n);
  for (double& x : v) x = dist(rng);
  return v;
}

// Matching distance that tries every pairing greedily from the smallest
// candidate pair; adequate for well-separated clusters.
inline double nearest_distance(const std::vector<std::complex<double>>& values,
                               std::complex<double> target) {
  double best = INFINITY;
  for (const auto& v : values) best = std::min(best, std::abs(v - target));
  return best;
}

}  // namespace oracle
