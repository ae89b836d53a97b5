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
#include <variant>

#include "nbwalk/graph.hpp"

namespace nbwalk {

struct RegularSpec {
  std::size_t d = 0;
  std::size_t n = 0;
};

struct BiregularSpec {
  std::size_t c = 0;
  std::size_t d = 0;
  std::size_t r = 0;  // vertices of degree c
  std::size_t s = 0;  // vertices of degree d
};

// Erdos-Renyi style G(n, p), resampled until the minimum degree is >= 2.
struct GnpSpec {
  std::size_t n = 0;
  double p = 0.0;
};

using GraphSpec = std::variant<RegularSpec, BiregularSpec, GnpSpec>;

inline constexpr std::size_t kDefaultGenerationAttempts = 100000;

// Configuration-model pairing with rejection of loops and multi-edges.
// Deterministic for a fixed seed. Throws InfeasibleProfile or
// GenerationExhausted.
Graph generate_test_graph(const GraphSpec& spec, std::uint64_t seed,
                          std::size_t max_attempts = kDefaultGenerationAttempts);

}  // namespace nbwalk
