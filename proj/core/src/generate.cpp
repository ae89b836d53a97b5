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

#include "nbwalk/generate.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "nbwalk/error.hpp"
#include "nbwalk/rng.hpp"

namespace nbwalk {
namespace {

template <typename T>
void shuffle(std::vector<T>& items, SplitMix64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.below(i));
    std::swap(items[i - 1], items[j]);
  }
}

// Pairs stubs[2k] with stubs[2k+1] (or left[k] with right[k]); returns false
// on a loop or a repeated pair.
bool pair_stubs(const std::vector<VertexId>& left, const std::vector<VertexId>& right,
                std::vector<UndirectedEdge>& edges) {
  std::set<UndirectedEdge> seen;
  edges.clear();
  for (std::size_t k = 0; k < left.size(); ++k) {
    const VertexId u = left[k];
    const VertexId v = right[k];
    if (u == v || !seen.insert(std::minmax(u, v)).second) return false;
    edges.emplace_back(u, v);
  }
  return true;
}

Graph generate(const RegularSpec& spec, SplitMix64& rng, std::size_t max_attempts) {
  if (spec.d < 2 || spec.n <= spec.d || (spec.n * spec.d) % 2 != 0) {
    throw Error(ErrorCode::InfeasibleProfile,
                "Regular(d=" + std::to_string(spec.d) + ", n=" + std::to_string(spec.n) + ")");
  }
  std::vector<VertexId> stubs;
  for (VertexId v = 0; v < spec.n; ++v) stubs.insert(stubs.end(), spec.d, v);
  const std::size_t half = stubs.size() / 2;
  std::vector<VertexId> left(half), right(half);
  std::vector<UndirectedEdge> edges;
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    shuffle(stubs, rng);
    for (std::size_t k = 0; k < half; ++k) {
      left[k] = stubs[2 * k];
      right[k] = stubs[2 * k + 1];
    }
    if (pair_stubs(left, right, edges)) return Graph::from_edges(spec.n, edges);
  }
  throw Error(ErrorCode::GenerationExhausted,
              "no simple Regular(d=" + std::to_string(spec.d) + ") pairing after " +
                  std::to_string(max_attempts) + " attempts");
}

Graph generate(const BiregularSpec& spec, SplitMix64& rng, std::size_t max_attempts) {
  if (spec.c < 2 || spec.d < 2 || spec.r == 0 || spec.s == 0 || spec.r * spec.c != spec.s * spec.d ||
      spec.c > spec.s || spec.d > spec.r) {
    throw Error(ErrorCode::InfeasibleProfile,
                "Biregular(c=" + std::to_string(spec.c) + ", d=" + std::to_string(spec.d) +
                    ", r=" + std::to_string(spec.r) + ", s=" + std::to_string(spec.s) + ")");
  }
  // Degree-c vertices are 0..r-1, degree-d vertices r..r+s-1.
  std::vector<VertexId> left, right;
  for (VertexId v = 0; v < spec.r; ++v) left.insert(left.end(), spec.c, v);
  for (VertexId v = 0; v < spec.s; ++v) right.insert(right.end(), spec.d, spec.r + v);
  std::vector<UndirectedEdge> edges;
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    shuffle(right, rng);
    if (pair_stubs(left, right, edges)) return Graph::from_edges(spec.r + spec.s, edges);
  }
  throw Error(ErrorCode::GenerationExhausted,
              "no simple biregular pairing after " + std::to_string(max_attempts) + " attempts");
}

Graph generate(const GnpSpec& spec, SplitMix64& rng, std::size_t max_attempts) {
  if (spec.n < 3 || !(spec.p > 0.0) || spec.p > 1.0) {
    throw Error(ErrorCode::InfeasibleProfile,
                "Gnp(n=" + std::to_string(spec.n) + ", p=" + std::to_string(spec.p) + ")");
  }
  std::vector<UndirectedEdge> edges;
  std::vector<std::size_t> degree(spec.n);
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    edges.clear();
    std::fill(degree.begin(), degree.end(), 0);
    for (VertexId u = 0; u < spec.n; ++u) {
      for (VertexId v = u + 1; v < spec.n; ++v) {
        if (rng.uniform() < spec.p) {
          edges.emplace_back(u, v);
          ++degree[u];
          ++degree[v];
        }
      }
    }
    if (*std::min_element(degree.begin(), degree.end()) >= 2) {
      return Graph::from_edges(spec.n, edges);
    }
  }
  throw Error(ErrorCode::GenerationExhausted,
              "no G(n,p) sample with minimum degree 2 after " + std::to_string(max_attempts) +
                  " attempts");
}

}  // namespace

Graph generate_test_graph(const GraphSpec& spec, std::uint64_t seed, std::size_t max_attempts) {
  SplitMix64 rng(seed);
  return std::visit([&](const auto& s) { return generate(s, rng, max_attempts); }, spec);
}

}  // namespace nbwalk
