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
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "nbwalk/matrix.hpp"

namespace nbwalk {

using VertexId = std::size_t;
using UndirectedEdge = std::pair<VertexId, VertexId>;

// Immutable simple undirected graph with minimum degree at least 2.
// Vertices are dense ids 0..n-1; the original string labels are retained.
class Graph {
 public:
  // Validates simplicity, vertex count and minimum degree. Edge order is
  // irrelevant; `labels.size()` fixes n.
  static Graph from_edges(std::vector<std::string> labels,
                          const std::vector<UndirectedEdge>& edges);

  // Vertices labelled "0".."n-1".
  static Graph from_edges(std::size_t n, const std::vector<UndirectedEdge>& edges);

  [[nodiscard]] std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  [[nodiscard]] std::size_t edge_count() const noexcept { return edge_count_; }
  [[nodiscard]] std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }
  [[nodiscard]] std::span<const VertexId> neighbors(VertexId v) const { return adjacency_.at(v); }
  [[nodiscard]] bool has_edge(VertexId u, VertexId v) const;
  // Sum of degrees, equal to 2m.
  [[nodiscard]] std::size_t volume() const noexcept { return 2 * edge_count_; }
  [[nodiscard]] std::size_t min_degree() const noexcept;

  [[nodiscard]] const std::string& label(VertexId v) const { return labels_.at(v); }
  [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return labels_; }
  [[nodiscard]] std::optional<VertexId> find(std::string_view label) const;

  // Edges as (min id, max id), sorted.
  [[nodiscard]] std::vector<UndirectedEdge> edges() const;

  [[nodiscard]] bool is_connected() const;

  // Equality of labelled graphs: same label set and the same edges between
  // labels, regardless of internal id assignment.
  friend bool operator==(const Graph& a, const Graph& b);

 private:
  Graph() = default;

  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<std::string> labels_;
  std::size_t edge_count_ = 0;
};

// Edge-list text: one "<label> <label>" per line; '#' starts a comment;
// blank lines are ignored. Labels get ids in first-appearance order.
Graph parse_edge_list(std::string_view text);
Graph read_edge_list(const std::filesystem::path& path);

// Canonical form: one edge per line sorted by (min id, max id).
std::string serialize_edge_list(const Graph& g);

struct RegularProfile {
  std::size_t d = 0;
  friend bool operator==(const RegularProfile&, const RegularProfile&) = default;
};

// Degree-c side has r vertices, degree-d side has s vertices, r >= s.
struct BiregularProfile {
  std::size_t c = 0;
  std::size_t d = 0;
  std::size_t r = 0;
  std::size_t s = 0;
  friend bool operator==(const BiregularProfile&, const BiregularProfile&) = default;
};

struct GeneralProfile {
  friend bool operator==(const GeneralProfile&, const GeneralProfile&) = default;
};

struct DegreeProfile {
  std::variant<RegularProfile, BiregularProfile, GeneralProfile> kind;
  bool bipartite = false;
  std::optional<std::pair<std::size_t, std::size_t>> part_sizes;

  [[nodiscard]] const RegularProfile* regular() const { return std::get_if<RegularProfile>(&kind); }
  [[nodiscard]] const BiregularProfile* biregular() const {
    return std::get_if<BiregularProfile>(&kind);
  }
};

// Regular takes precedence over Biregular.
DegreeProfile classify(const Graph& g);
std::string describe(const DegreeProfile& profile);

Matrix adjacency_matrix(const Graph& g);
Matrix degree_matrix(const Graph& g);

}  // namespace nbwalk
