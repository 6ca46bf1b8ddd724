// Copyright 2026 The qt2ec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QT2EC_GRAPH_HPP_
#define QT2EC_GRAPH_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "qt2ec/errors.hpp"

namespace qt2ec {

using Vertex = std::uint32_t;
using EdgeIndex = std::uint32_t;
using VertexBitset = boost::dynamic_bitset<std::uint64_t>;

// Canonical undirected edge; always u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  constexpr Edge() = default;
  constexpr Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  constexpr bool has_endpoint(Vertex x) const { return x == u || x == v; }
  // The endpoint that is not x. x must be an endpoint.
  constexpr Vertex other(Vertex x) const { return x == u ? v : u; }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

// An induced path u - centre - w: edges u-centre and centre-w present,
// u-w absent. Reported with u < w so each induced P3 appears once.
struct InducedP3 {
  Vertex u = 0;
  Vertex centre = 0;
  Vertex w = 0;

  friend constexpr auto operator<=>(const InducedP3&,
                                    const InducedP3&) = default;
};

// Immutable undirected simple graph on vertices 0..n-1.
//
// Edges are indexed densely in lexicographic (u, v) order. Adjacency is kept
// both as per-vertex bitsets (for membership and neighbourhood algebra) and as
// sorted neighbour lists (for iteration). An optional label table maps dense
// ids back to external names.
class Graph {
 public:
  Graph() = default;

  explicit Graph(std::size_t n, std::span<const Edge> edges = {},
                 std::vector<std::string> labels = {})
      : n_(n), adj_(n, VertexBitset(n)), neighbours_(n) {
    if (!labels.empty() && labels.size() != n) {
      throw ContractError("label table size does not match vertex count");
    }
    labels_ = std::move(labels);
    edges_.reserve(edges.size());
    for (const Edge& e : edges) {
      if (e.u == e.v) {
        throw ContractError("self-loop at vertex " + std::to_string(e.u));
      }
      if (e.v >= n) {
        throw ContractError("edge endpoint " + std::to_string(e.v) +
                            " out of range");
      }
      edges_.push_back(e);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (const Edge& e : edges_) {
      adj_[e.u].set(e.v);
      adj_[e.v].set(e.u);
      neighbours_[e.u].push_back(e.v);
      neighbours_[e.v].push_back(e.u);
    }
    for (auto& list : neighbours_) std::sort(list.begin(), list.end());
  }

  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeIndex i) const { return edges_.at(i); }

  bool adjacent(Vertex a, Vertex b) const {
    return a < n_ && b < n_ && adj_[a].test(b);
  }

  const VertexBitset& neighbour_set(Vertex v) const { return adj_.at(v); }
  const std::vector<Vertex>& neighbours(Vertex v) const {
    return neighbours_.at(v);
  }
  std::size_t degree(Vertex v) const { return neighbours_.at(v).size(); }

  std::optional<EdgeIndex> find_edge(Vertex a, Vertex b) const {
    if (a == b || !adjacent(a, b)) return std::nullopt;
    const Edge key(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    return static_cast<EdgeIndex>(it - edges_.begin());
  }

  EdgeIndex edge_index(Vertex a, Vertex b) const {
    if (auto idx = find_edge(a, b)) return *idx;
    throw ContractError("no edge " + std::to_string(a) + "-" +
                        std::to_string(b));
  }

  bool has_labels() const noexcept { return !labels_.empty(); }
  std::string label(Vertex v) const {
    if (v >= n_) throw ContractError("vertex out of range");
    return labels_.empty() ? std::to_string(v) : labels_[v];
  }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  // Same edge set, different (or no) labels.
  Graph with_labels(std::vector<std::string> labels) const {
    return Graph(n_, edges_, std::move(labels));
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexBitset> adj_;
  std::vector<std::vector<Vertex>> neighbours_;
  std::vector<std::string> labels_;
};

// Induced subgraph together with the map from new ids to original ids.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original;  // original[new_id] = old_id
};

// Every induced P3 exactly once, ordered by centre, then u, then w.
inline std::vector<InducedP3> induced_p3s(const Graph& g) {
  std::vector<InducedP3> out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const auto& nb = g.neighbours(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (!g.adjacent(nb[i], nb[j])) out.push_back({nb[i], v, nb[j]});
      }
    }
  }
  return out;
}

inline VertexBitset to_bitset(const Graph& g, std::span<const Vertex> set) {
  VertexBitset bits(g.num_vertices());
  for (Vertex v : set) {
    if (v >= g.num_vertices()) throw ContractError("vertex out of range");
    bits.set(v);
  }
  return bits;
}

inline std::vector<Vertex> to_vertices(const VertexBitset& bits) {
  std::vector<Vertex> out;
  for (auto i = bits.find_first(); i != VertexBitset::npos;
       i = bits.find_next(i)) {
    out.push_back(static_cast<Vertex>(i));
  }
  return out;
}

// True iff every vertex outside `set` sees all of it or none of it.
inline bool is_module_set(const Graph& g, const VertexBitset& set) {
  const std::size_t size = set.count();
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    if (set.test(x)) continue;
    const std::size_t seen = (g.neighbour_set(x) & set).count();
    if (seen != 0 && seen != size) return false;
  }
  return true;
}

inline bool is_module_set(const Graph& g, std::span<const Vertex> set) {
  return is_module_set(g, to_bitset(g, set));
}

// Connected components as sorted vertex lists, ordered by least vertex.
inline std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Vertex>> comps;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    comps.emplace_back();
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      comps.back().push_back(v);
      for (Vertex w : g.neighbours(v)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(comps.back().begin(), comps.back().end());
  }
  return comps;
}

// The empty graph counts as connected.
inline bool is_connected(const Graph& g) {
  return connected_components(g).size() <= 1;
}

inline InducedSubgraph induced_subgraph(const Graph& g,
                                        std::span<const Vertex> set) {
  std::vector<Vertex> original(set.begin(), set.end());
  std::sort(original.begin(), original.end());
  if (std::adjacent_find(original.begin(), original.end()) != original.end()) {
    throw ContractError("induced_subgraph: repeated vertex");
  }
  if (!original.empty() && original.back() >= g.num_vertices()) {
    throw ContractError("induced_subgraph: vertex outside the graph");
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < original.size(); ++i) {
    for (std::size_t j = i + 1; j < original.size(); ++j) {
      if (g.adjacent(original[i], original[j])) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  std::vector<std::string> labels;
  if (g.has_labels()) {
    for (Vertex v : original) labels.push_back(g.label(v));
  }
  return {Graph(original.size(), edges, std::move(labels)),
          std::move(original)};
}

// Complement on the same vertex ids.
inline Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex a = 0; a < g.num_vertices(); ++a) {
    for (Vertex b = a + 1; b < g.num_vertices(); ++b) {
      if (!g.adjacent(a, b)) edges.emplace_back(a, b);
    }
  }
  return Graph(g.num_vertices(), edges);
}

// If the complement of g is a disjoint union of cliques, the vertex sets of
// those cliques (the parts); otherwise nullopt.
inline std::optional<std::vector<std::vector<Vertex>>>
is_complete_multipartite(const Graph& g) {
  const Graph co = complement(g);
  auto parts = connected_components(co);
  for (const auto& part : parts) {
    for (Vertex v : part) {
      if (co.degree(v) + 1 != part.size()) return std::nullopt;
    }
  }
  return parts;
}

inline bool is_complete_tripartite(const Graph& g) {
  auto parts = is_complete_multipartite(g);
  return parts && parts->size() == 3;
}

// A vertex set induces a join when it splits into two nonempty parts with
// every cross pair adjacent, i.e. when its induced complement is disconnected.
inline bool induces_join(const Graph& g, std::span<const Vertex> set) {
  if (set.size() < 2) return false;
  const InducedSubgraph sub = induced_subgraph(g, set);
  return !is_connected(complement(sub.graph));
}

}  // namespace qt2ec

#endif  // QT2EC_GRAPH_HPP_
