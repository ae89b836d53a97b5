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

#include "nbwalk/graph.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_map>

#include "nbwalk/error.hpp"

namespace nbwalk {

Graph Graph::from_edges(std::vector<std::string> labels, const std::vector<UndirectedEdge>& edges) {
  const std::size_t n = labels.size();
  if (n < 2) {
    throw Error(ErrorCode::TooFewVertices, "graph has " + std::to_string(n) + " vertices");
  }
  Graph g;
  g.labels_ = std::move(labels);
  g.adjacency_.assign(n, {});
  std::set<UndirectedEdge> seen;
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw Error(ErrorCode::UnknownVertex, "edge endpoint out of range");
    }
    if (u == v) {
      throw Error(ErrorCode::SelfLoop, "vertex '" + g.labels_[u] + "'");
    }
    if (!seen.insert(std::minmax(u, v)).second) {
      throw Error(ErrorCode::DuplicateEdge,
                  "edge '" + g.labels_[u] + "' - '" + g.labels_[v] + "'");
    }
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  g.edge_count_ = seen.size();
  for (auto& adj : g.adjacency_) std::sort(adj.begin(), adj.end());
  for (VertexId v = 0; v < n; ++v) {
    if (g.adjacency_[v].size() < 2) {
      throw Error(ErrorCode::MinDegreeViolation,
                  "vertex '" + g.labels_[v] + "' has degree " +
                      std::to_string(g.adjacency_[v].size()));
    }
  }
  return g;
}

Graph Graph::from_edges(std::size_t n, const std::vector<UndirectedEdge>& edges) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return from_edges(std::move(labels), edges);
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  const auto& adj = adjacency_.at(u);
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::size_t Graph::min_degree() const noexcept {
  std::size_t best = adjacency_.empty() ? 0 : adjacency_.front().size();
  for (const auto& adj : adjacency_) best = std::min(best, adj.size());
  return best;
}

std::optional<VertexId> Graph::find(std::string_view label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<VertexId>(it - labels_.begin());
}

std::vector<UndirectedEdge> Graph::edges() const {
  std::vector<UndirectedEdge> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < adjacency_.size(); ++u)
    for (VertexId v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool Graph::is_connected() const {
  const std::size_t n = vertex_count();
  std::vector<bool> seen(n, false);
  std::queue<VertexId> frontier;
  frontier.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const VertexId u = frontier.front();
    frontier.pop();
    for (VertexId v : adjacency_[u]) {
      if (!seen[v]) {
        seen[v] = true;
        ++reached;
        frontier.push(v);
      }
    }
  }
  return reached == n;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  auto labelled = [](const Graph& g) {
    std::set<std::pair<std::string, std::string>> out;
    for (auto [u, v] : g.edges()) out.insert(std::minmax(g.label(u), g.label(v)));
    return out;
  };
  const std::set<std::string> la(a.labels_.begin(), a.labels_.end());
  const std::set<std::string> lb(b.labels_.begin(), b.labels_.end());
  return la == lb && labelled(a) == labelled(b);
}

Graph parse_edge_list(std::string_view text) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, VertexId> ids;
  std::vector<UndirectedEdge> edges;
  std::set<UndirectedEdge> seen;

  auto intern = [&](const std::string& label) {
    auto [it, inserted] = ids.try_emplace(label, labels.size());
    if (inserted) labels.push_back(label);
    return it->second;
  };

  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a)) continue;
    if (!(fields >> b) || (fields >> extra)) {
      throw Error(ErrorCode::MalformedLine,
                  "line " + std::to_string(line_no) + ": expected two vertex labels");
    }
    if (a == b) {
      throw Error(ErrorCode::SelfLoop,
                  "line " + std::to_string(line_no) + ": vertex '" + a + "'");
    }
    const VertexId u = intern(a);
    const VertexId v = intern(b);
    if (!seen.insert(std::minmax(u, v)).second) {
      throw Error(ErrorCode::DuplicateEdge,
                  "line " + std::to_string(line_no) + ": edge '" + a + "' - '" + b + "'");
    }
    edges.emplace_back(u, v);
  }
  return Graph::from_edges(std::move(labels), edges);
}

Graph read_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_edge_list(buffer.str());
}

std::string serialize_edge_list(const Graph& g) {
  std::string out;
  for (auto [u, v] : g.edges()) {
    out += g.label(u);
    out += ' ';
    out += g.label(v);
    out += '\n';
  }
  return out;
}

DegreeProfile classify(const Graph& g) {
  const std::size_t n = g.vertex_count();
  DegreeProfile profile{GeneralProfile{}, false, std::nullopt};

  // Two-colouring per component; component roots get colour 0.
  std::vector<int> colour(n, -1);
  bool bipartite = true;
  for (VertexId root = 0; root < n && bipartite; ++root) {
    if (colour[root] != -1) continue;
    colour[root] = 0;
    std::queue<VertexId> frontier;
    frontier.push(root);
    while (!frontier.empty() && bipartite) {
      const VertexId u = frontier.front();
      frontier.pop();
      for (VertexId v : g.neighbors(u)) {
        if (colour[v] == -1) {
          colour[v] = 1 - colour[u];
          frontier.push(v);
        } else if (colour[v] == colour[u]) {
          bipartite = false;
          break;
        }
      }
    }
  }
  profile.bipartite = bipartite;
  if (bipartite) {
    const auto zeros = static_cast<std::size_t>(std::count(colour.begin(), colour.end(), 0));
    profile.part_sizes = std::make_pair(std::max(zeros, n - zeros), std::min(zeros, n - zeros));
  }

  std::map<std::size_t, std::size_t> degree_counts;
  for (VertexId v = 0; v < n; ++v) ++degree_counts[g.degree(v)];
  if (degree_counts.size() == 1) {
    profile.kind = RegularProfile{degree_counts.begin()->first};
    return profile;
  }
  if (bipartite && degree_counts.size() == 2) {
    // Biregular iff every edge joins the two degree classes; that induces the
    // bipartition even when the graph is disconnected.
    const std::size_t low = degree_counts.begin()->first;
    const std::size_t high = degree_counts.rbegin()->first;
    bool across = true;
    for (auto [u, v] : g.edges()) {
      if (g.degree(u) == g.degree(v)) {
        across = false;
        break;
      }
    }
    if (across) {
      // r * c = s * d with c < d forces r > s: the low-degree side is larger.
      profile.kind = BiregularProfile{low, high, degree_counts[low], degree_counts[high]};
      profile.part_sizes = std::make_pair(degree_counts[low], degree_counts[high]);
    }
  }
  return profile;
}

std::string describe(const DegreeProfile& profile) {
  if (const auto* r = profile.regular()) return "Regular(d=" + std::to_string(r->d) + ")";
  if (const auto* b = profile.biregular()) {
    return "Biregular(c=" + std::to_string(b->c) + ",d=" + std::to_string(b->d) +
           ",r=" + std::to_string(b->r) + ",s=" + std::to_string(b->s) + ")";
  }
  return "General";
}

Matrix adjacency_matrix(const Graph& g) {
  const std::size_t n = g.vertex_count();
  Matrix a(n, n);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v : g.neighbors(u)) a(u, v) = 1.0;
  return a;
}

Matrix degree_matrix(const Graph& g) {
  const std::size_t n = g.vertex_count();
  Matrix d(n, n);
  for (VertexId v = 0; v < n; ++v) d(v, v) = static_cast<double>(g.degree(v));
  return d;
}

}  // namespace nbwalk
