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

#ifndef QT2EC_STRUCTURE_HPP_
#define QT2EC_STRUCTURE_HPP_

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qt2ec/edge_classes.hpp"
#include "qt2ec/errors.hpp"
#include "qt2ec/graph.hpp"
#include "qt2ec/graph_io.hpp"
#include "qt2ec/report.hpp"

namespace qt2ec {

enum class PairTag { kDisjoint, kNested, kCrossing };

inline const char* to_string(PairTag t) {
  switch (t) {
    case PairTag::kDisjoint:
      return "disjoint";
    case PairTag::kNested:
      return "nested";
    case PairTag::kCrossing:
      return "crossing";
  }
  return "?";
}

// How the vertex sets of two classes c and d overlap.
struct ClassPairRelation {
  std::vector<Vertex> only_first;   // V(c) \ V(d)
  std::vector<Vertex> only_second;  // V(d) \ V(c)
  std::vector<Vertex> shared;       // V(c) n V(d)
  PairTag tag = PairTag::kDisjoint;
};

inline ClassPairRelation class_pair_relation(const EdgeClassPartition& p,
                                             ClassId c, ClassId d) {
  if (c == d) throw ContractError("class_pair_relation: classes must differ");
  if (c >= p.size() || d >= p.size()) throw ContractError("unknown class id");
  const auto& vc = p.vertex_sets[c];
  const auto& vd = p.vertex_sets[d];
  ClassPairRelation r;
  std::set_difference(vc.begin(), vc.end(), vd.begin(), vd.end(),
                      std::back_inserter(r.only_first));
  std::set_difference(vd.begin(), vd.end(), vc.begin(), vc.end(),
                      std::back_inserter(r.only_second));
  std::set_intersection(vc.begin(), vc.end(), vd.begin(), vd.end(),
                        std::back_inserter(r.shared));
  if (r.shared.empty()) {
    r.tag = PairTag::kDisjoint;
  } else if (r.only_first.empty() || r.only_second.empty()) {
    r.tag = PairTag::kNested;
  } else {
    r.tag = PairTag::kCrossing;
  }
  return r;
}

inline ClassPairRelation class_pair_relation(const Graph& g,
                                             const EdgeClassPartition& p,
                                             ClassId c, ClassId d) {
  check_partition_shape(g, p);
  return class_pair_relation(p, c, d);
}

namespace lemma {
inline constexpr const char* kNoClassEdgeInShared = "crossing.shared_has_no_class_edge";
inline constexpr const char* kOuterFullyAdjacent = "crossing.outer_fully_adjacent";
inline constexpr const char* kEdgesTouchShared = "crossing.edges_touch_shared";
inline constexpr const char* kNoJoin = "crossing.no_part_is_join";
inline constexpr const char* kOuterEdgesOneClass = "crossing.outer_edges_one_class";
}  // namespace lemma

// The consequences of a crossing pair (c, d) with parts A = V(c)\V(d),
// B = V(d)\V(c), I = V(c) n V(d):
//   (a) no edge of c or d has both ends in I;
//   (b) A is complete to V(d) and B is complete to V(c);
//   (c) every edge of c and of d has an end in I;
//   (d) none of A, B, I induces a join;
//   (e) all A-B edges lie in one class other than c and d.
inline VerificationReport check_crossing_lemmas(const Graph& g,
                                                const EdgeClassPartition& p,
                                                ClassId c, ClassId d) {
  check_partition_shape(g, p);
  const ClassPairRelation rel = class_pair_relation(g, p, c, d);
  if (rel.tag != PairTag::kCrossing) {
    throw ContractError("check_crossing_lemmas: pair is not crossing");
  }
  const std::string key = encode_graph6(g);
  const std::string note =
      "classes " + std::to_string(c) + "," + std::to_string(d);
  const VertexBitset i_set = to_bitset(g, rel.shared);
  VerificationReport report;
  auto emit = [&](const char* name, const nlohmann::json& witness) {
    if (witness.is_null()) {
      report.pass(name, key, note);
    } else {
      report.fail(name, key, witness, note);
    }
  };

  {
    nlohmann::json witness;
    for (ClassId cls : {c, d}) {
      for (EdgeIndex e : p.classes[cls]) {
        const Edge& ed = g.edge(e);
        if (i_set.test(ed.u) && i_set.test(ed.v) && witness.is_null()) {
          witness = {{"edge", {ed.u, ed.v}}, {"class", cls}};
        }
      }
    }
    emit(lemma::kNoClassEdgeInShared, witness);
  }

  {
    nlohmann::json witness;
    auto complete_to = [&](const std::vector<Vertex>& from,
                           const std::vector<Vertex>& to) {
      for (Vertex x : from) {
        for (Vertex y : to) {
          if (!g.adjacent(x, y) && witness.is_null()) {
            witness = {{"non_edge", {x, y}}};
          }
        }
      }
    };
    complete_to(rel.only_first, p.vertex_sets[d]);
    complete_to(rel.only_second, p.vertex_sets[c]);
    emit(lemma::kOuterFullyAdjacent, witness);
  }

  {
    nlohmann::json witness;
    for (ClassId cls : {c, d}) {
      for (EdgeIndex e : p.classes[cls]) {
        const Edge& ed = g.edge(e);
        if (!i_set.test(ed.u) && !i_set.test(ed.v) && witness.is_null()) {
          witness = {{"edge", {ed.u, ed.v}}, {"class", cls}};
        }
      }
    }
    emit(lemma::kEdgesTouchShared, witness);
  }

  {
    nlohmann::json witness;
    const std::pair<const char*, const std::vector<Vertex>*> parts[] = {
        {"only_first", &rel.only_first},
        {"only_second", &rel.only_second},
        {"shared", &rel.shared}};
    for (const auto& [name, set] : parts) {
      if (induces_join(g, *set) && witness.is_null()) {
        witness = {{"part", name}, {"vertices", *set}};
      }
    }
    emit(lemma::kNoJoin, witness);
  }

  {
    nlohmann::json witness;
    std::optional<ClassId> outer;
    for (Vertex x : rel.only_first) {
      for (Vertex y : rel.only_second) {
        const auto e = g.find_edge(x, y);
        if (!e || !witness.is_null()) continue;
        const ClassId cls = p.class_of[*e];
        if (cls == c || cls == d || (outer && *outer != cls)) {
          witness = {{"edge", {std::min(x, y), std::max(x, y)}},
                     {"class", cls}};
        }
        if (!outer) outer = cls;
      }
    }
    emit(lemma::kOuterEdgesOneClass, witness);
  }
  return report;
}

// Outcome for a connected graph with exactly three classes. At least one of
// the two facts holds; both are reported when both hold.
struct ThreeClassOutcome {
  std::optional<std::vector<std::vector<Vertex>>> tripartite_parts;
  std::optional<ClassId> spanning_class;  // V(S) = V(G)

  bool complete_tripartite() const { return tripartite_parts.has_value(); }
  bool classified() const {
    return tripartite_parts.has_value() || spanning_class.has_value();
  }
};

inline ThreeClassOutcome three_class_classification(
    const Graph& g, const EdgeClassPartition& p) {
  check_partition_shape(g, p);
  if (p.size() != 3) {
    throw ContractError("three_class_classification: graph has " +
                        std::to_string(p.size()) + " classes, not 3");
  }
  if (!is_connected(g)) {
    throw ContractError("three_class_classification: graph is not connected");
  }
  ThreeClassOutcome out;
  if (auto parts = is_complete_multipartite(g); parts && parts->size() == 3) {
    out.tripartite_parts = std::move(parts);
  }
  for (ClassId c = 0; c < p.size(); ++c) {
    if (p.vertex_sets[c].size() == g.num_vertices()) {
      out.spanning_class = c;
      break;
    }
  }
  return out;
}

inline ThreeClassOutcome three_class_classification(const Graph& g) {
  return three_class_classification(g, compute_classes(g));
}

inline constexpr const char* kTinyLemma = "crossing.tiny_lemma";

// Scans every configuration u, v, y in I, x in B with uv, vx in S_f,
// vy in E \ S_f and uy in S_e (for ordered class pairs (e, f) with
// V(S_e) \ V(S_f) nonempty) and requires ux in E. The note carries the
// number of instances found.
inline VerificationReport check_tinylemma_instances(
    const Graph& g, const EdgeClassPartition& p) {
  check_partition_shape(g, p);
  const std::string key = encode_graph6(g);
  std::size_t instances = 0;
  nlohmann::json witness;
  for (ClassId ce = 0; ce < p.size(); ++ce) {
    for (ClassId cf = 0; cf < p.size(); ++cf) {
      if (ce == cf) continue;
      const ClassPairRelation rel = class_pair_relation(p, ce, cf);
      if (rel.only_first.empty() || rel.shared.empty() ||
          rel.only_second.empty()) {
        continue;
      }
      const VertexBitset i_set = to_bitset(g, rel.shared);
      const VertexBitset b_set = to_bitset(g, rel.only_second);
      for (EdgeIndex uv : p.classes[cf]) {
        const Edge& ed = g.edge(uv);
        if (!i_set.test(ed.u) || !i_set.test(ed.v)) continue;
        for (Vertex u : {ed.u, ed.v}) {
          const Vertex v = ed.other(u);
          for (Vertex x : g.neighbours(v)) {
            if (!b_set.test(x) || p.class_of[g.edge_index(v, x)] != cf) {
              continue;
            }
            for (Vertex y : rel.shared) {
              if (y == u || y == v) continue;
              const auto vy = g.find_edge(v, y);
              const auto uy = g.find_edge(u, y);
              if (!vy || p.class_of[*vy] == cf) continue;
              if (!uy || p.class_of[*uy] != ce) continue;
              ++instances;
              if (!g.adjacent(u, x) && witness.is_null()) {
                witness = {{"u", u}, {"v", v}, {"x", x}, {"y", y}};
              }
            }
          }
        }
      }
    }
  }
  const std::string note = "instances=" + std::to_string(instances);
  VerificationReport report;
  if (witness.is_null()) {
    report.pass(kTinyLemma, key, note);
  } else {
    report.fail(kTinyLemma, key, witness, note);
  }
  return report;
}

}  // namespace qt2ec

#endif  // QT2EC_STRUCTURE_HPP_
