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

#ifndef QT2EC_EDGE_CLASSES_HPP_
#define QT2EC_EDGE_CLASSES_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <set>
#include <string>
#include <vector>

#include "qt2ec/errors.hpp"
#include "qt2ec/graph.hpp"
#include "qt2ec/graph_io.hpp"
#include "qt2ec/report.hpp"
#include "qt2ec/union_find.hpp"

namespace qt2ec {

using ClassId = std::uint32_t;

// The partition of E(G) into classes: each class is the smallest edge set
// containing one of its edges that no induced P3 straddles. Class ids are
// ordered by the least edge index each class contains.
struct EdgeClassPartition {
  std::vector<ClassId> class_of;                // edge index -> class id
  std::vector<std::vector<EdgeIndex>> classes;  // sorted edge indices
  std::vector<std::vector<Vertex>> vertex_sets; // sorted endpoints, V(S)

  std::size_t size() const noexcept { return classes.size(); }
  std::size_t num_edges() const noexcept { return class_of.size(); }

  bool same_class(EdgeIndex a, EdgeIndex b) const {
    return class_of.at(a) == class_of.at(b);
  }

  friend bool operator==(const EdgeClassPartition&,
                         const EdgeClassPartition&) = default;
};

// Builds a partition from an arbitrary edge labelling, renumbering classes by
// least edge index. Used by compute_classes and by tests that need to
// fabricate partitions.
inline EdgeClassPartition partition_from_labels(
    const Graph& g, const std::vector<std::uint32_t>& label) {
  if (label.size() != g.num_edges()) {
    throw ContractError("partition labelling does not cover E(G)");
  }
  constexpr auto kUnset = std::numeric_limits<ClassId>::max();
  std::vector<ClassId> remap;
  EdgeClassPartition p;
  p.class_of.assign(g.num_edges(), kUnset);
  for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
    const auto l = label[e];
    if (l >= remap.size()) remap.resize(l + 1, kUnset);
    if (remap[l] == kUnset) {
      remap[l] = static_cast<ClassId>(p.classes.size());
      p.classes.emplace_back();
    }
    p.class_of[e] = remap[l];
    p.classes[remap[l]].push_back(e);
  }
  for (const auto& cls : p.classes) {
    VertexBitset ends(g.num_vertices());
    for (EdgeIndex e : cls) {
      ends.set(g.edge(e).u);
      ends.set(g.edge(e).v);
    }
    p.vertex_sets.push_back(to_vertices(ends));
  }
  return p;
}

// Union-find over edge indices: every induced P3 u-v-w merges uv with vw.
// The components are exactly the minimal induced-P3-closed edge sets.
inline EdgeClassPartition compute_classes(const Graph& g) {
  UnionFind<EdgeIndex> uf(g.num_edges());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const auto& nb = g.neighbours(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      const EdgeIndex left = g.edge_index(nb[i], v);
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (!g.adjacent(nb[i], nb[j])) uf.unite(left, g.edge_index(v, nb[j]));
      }
    }
  }
  std::vector<std::uint32_t> roots(g.num_edges());
  for (EdgeIndex e = 0; e < g.num_edges(); ++e) roots[e] = uf.find(e);
  return partition_from_labels(g, roots);
}

// S_e as a sorted list of edge indices.
inline const std::vector<EdgeIndex>& class_of_edge(const EdgeClassPartition& p,
                                                   EdgeIndex e) {
  if (e >= p.class_of.size()) throw ContractError("unknown edge index");
  return p.classes[p.class_of[e]];
}

inline const std::vector<EdgeIndex>& class_of_edge(const Graph& g,
                                                   const EdgeClassPartition& p,
                                                   Vertex a, Vertex b) {
  const auto idx = g.find_edge(a, b);
  if (!idx) throw ContractError("edge not in graph");
  return class_of_edge(p, *idx);
}

// Graph with vertex set V(S) and edge set S, reindexed densely.
inline InducedSubgraph class_subgraph(const Graph& g,
                                      std::span<const EdgeIndex> cls) {
  VertexBitset ends(g.num_vertices());
  for (EdgeIndex e : cls) {
    ends.set(g.edge(e).u);
    ends.set(g.edge(e).v);
  }
  std::vector<Vertex> original = to_vertices(ends);
  std::vector<Vertex> local(g.num_vertices(), 0);
  for (std::size_t i = 0; i < original.size(); ++i) {
    local[original[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (EdgeIndex e : cls) {
    edges.emplace_back(local[g.edge(e).u], local[g.edge(e).v]);
  }
  return {Graph(original.size(), edges), std::move(original)};
}

inline void check_partition_shape(const Graph& g, const EdgeClassPartition& p) {
  if (p.class_of.size() != g.num_edges() ||
      p.vertex_sets.size() != p.classes.size()) {
    throw ContractError("partition does not belong to this graph");
  }
  std::size_t covered = 0;
  for (ClassId c = 0; c < p.classes.size(); ++c) {
    for (EdgeIndex e : p.classes[c]) {
      if (e >= g.num_edges() || p.class_of[e] != c) {
        throw ContractError("partition tables disagree");
      }
      ++covered;
    }
  }
  if (covered != g.num_edges()) {
    throw ContractError("partition classes do not cover E(G) exactly once");
  }
}

namespace law {
inline constexpr const char* kClassConnected = "partition.class_connected";
inline constexpr const char* kDichromatic = "partition.dichromatic_adjacency";
inline constexpr const char* kDistinctVertexSets =
    "partition.distinct_vertex_sets";
inline constexpr const char* kP3IntraClass = "partition.p3_intra_class";
}  // namespace law

// Checks the structural laws every class partition satisfies: connected class
// subgraphs; uw in E whenever uv and vw lie in different classes; pairwise
// distinct class vertex sets; no induced P3 split across classes.
inline VerificationReport verify_partition_laws(const Graph& g,
                                                const EdgeClassPartition& p) {
  check_partition_shape(g, p);
  const std::string key = encode_graph6(g);
  VerificationReport report;

  {
    nlohmann::json witness;
    for (ClassId c = 0; c < p.size() && witness.is_null(); ++c) {
      if (!is_connected(class_subgraph(g, p.classes[c]).graph)) {
        witness = {{"class", c}, {"vertices", p.vertex_sets[c]}};
      }
    }
    if (witness.is_null()) {
      report.pass(law::kClassConnected, key);
    } else {
      report.fail(law::kClassConnected, key, witness);
    }
  }

  {
    nlohmann::json witness;
    for (Vertex v = 0; v < g.num_vertices() && witness.is_null(); ++v) {
      const auto& nb = g.neighbours(v);
      for (std::size_t i = 0; i < nb.size() && witness.is_null(); ++i) {
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
          const auto a = g.edge_index(nb[i], v);
          const auto b = g.edge_index(v, nb[j]);
          if (!p.same_class(a, b) && !g.adjacent(nb[i], nb[j])) {
            witness = {nb[i], v, nb[j]};
            break;
          }
        }
      }
    }
    if (witness.is_null()) {
      report.pass(law::kDichromatic, key);
    } else {
      report.fail(law::kDichromatic, key, witness);
    }
  }

  {
    std::set<std::vector<Vertex>> seen;
    nlohmann::json witness;
    for (ClassId c = 0; c < p.size(); ++c) {
      if (!seen.insert(p.vertex_sets[c]).second) {
        witness = {{"class", c}, {"vertices", p.vertex_sets[c]}};
        break;
      }
    }
    if (witness.is_null()) {
      report.pass(law::kDistinctVertexSets, key);
    } else {
      report.fail(law::kDistinctVertexSets, key, witness);
    }
  }

  {
    nlohmann::json witness;
    for (const InducedP3& t : induced_p3s(g)) {
      if (!p.same_class(g.edge_index(t.u, t.centre),
                        g.edge_index(t.centre, t.w))) {
        witness = {t.u, t.centre, t.w};
        break;
      }
    }
    if (witness.is_null()) {
      report.pass(law::kP3IntraClass, key);
    } else {
      report.fail(law::kP3IntraClass, key, witness);
    }
  }
  return report;
}

}  // namespace qt2ec

#endif  // QT2EC_EDGE_CLASSES_HPP_
