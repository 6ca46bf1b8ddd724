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

#ifndef QT2EC_ORIENTATION_HPP_
#define QT2EC_ORIENTATION_HPP_

#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qt2ec/colouring.hpp"
#include "qt2ec/edge_classes.hpp"
#include "qt2ec/errors.hpp"
#include "qt2ec/graph.hpp"
#include "qt2ec/mask_range.hpp"
#include "qt2ec/union_find.hpp"

namespace qt2ec {

// Direction of an edge relative to its canonical (low, high) endpoints.
enum class Direction : std::int8_t { kUnset = -1, kForward = 0, kReverse = 1 };

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;
  friend constexpr auto operator<=>(const Arc&, const Arc&) = default;
};

// Partial or total orientation, indexed by edge index.
struct Orientation {
  std::vector<Direction> dir;

  static Orientation unset(std::size_t m) {
    return {std::vector<Direction>(m, Direction::kUnset)};
  }

  bool oriented(EdgeIndex e) const { return dir.at(e) != Direction::kUnset; }

  bool is_total() const {
    for (auto d : dir) {
      if (d == Direction::kUnset) return false;
    }
    return true;
  }

  std::vector<EdgeIndex> domain() const {
    std::vector<EdgeIndex> out;
    for (EdgeIndex e = 0; e < dir.size(); ++e) {
      if (dir[e] != Direction::kUnset) out.push_back(e);
    }
    return out;
  }

  Orientation reversed() const {
    Orientation out = *this;
    for (auto& d : out.dir) {
      if (d == Direction::kForward) {
        d = Direction::kReverse;
      } else if (d == Direction::kReverse) {
        d = Direction::kForward;
      }
    }
    return out;
  }

  Orientation restricted(std::span<const EdgeIndex> keep) const {
    Orientation out = unset(dir.size());
    for (EdgeIndex e : keep) out.dir.at(e) = dir.at(e);
    return out;
  }

  friend bool operator==(const Orientation&, const Orientation&) = default;
};

inline Direction direction_of(const Edge& e, const Arc& a) {
  return a.tail == e.u ? Direction::kForward : Direction::kReverse;
}

inline Arc arc_of(const Edge& e, Direction d) {
  return d == Direction::kReverse ? Arc{e.v, e.u} : Arc{e.u, e.v};
}

// Whether edge e, oriented d, has its head at endpoint x.
inline bool head_at(const Edge& e, Direction d, Vertex x) {
  return (d == Direction::kForward) == (x == e.v);
}

// Direction that puts (or does not put) the head of e at x.
inline Direction direction_with_head(const Edge& e, Vertex x, bool head) {
  return head == (x == e.v) ? Direction::kForward : Direction::kReverse;
}

inline std::vector<Arc> arcs(const Graph& g, const Orientation& o) {
  std::vector<Arc> out;
  for (EdgeIndex e : o.domain()) out.push_back(arc_of(g.edge(e), o.dir[e]));
  return out;
}

inline Orientation orientation_from_arcs(const Graph& g,
                                         std::span<const Arc> list) {
  Orientation o = Orientation::unset(g.num_edges());
  for (const Arc& a : list) {
    const EdgeIndex e = g.edge_index(a.tail, a.head);
    const Direction d = direction_of(g.edge(e), a);
    if (o.dir[e] != Direction::kUnset && o.dir[e] != d) {
      throw ContractError("edge oriented both ways");
    }
    o.dir[e] = d;
  }
  return o;
}

// "tail -> head" per oriented edge, in edge-index order.
inline std::string write_arcs(const Graph& g, const Orientation& o) {
  std::ostringstream out;
  for (const Arc& a : arcs(g, o)) {
    out << g.label(a.tail) << " -> " << g.label(a.head) << '\n';
  }
  return out.str();
}

struct OrientationCheck {
  bool valid = true;
  std::optional<InducedP3> witness;  // an induced directed 2-path
};

// Valid iff every induced P3 has its centre as a common head or common tail.
inline OrientationCheck is_quasi_transitive_orientation(const Graph& g,
                                                        const Orientation& o) {
  if (o.dir.size() != g.num_edges() || !o.is_total()) {
    throw ContractError("orientation is not total on E(G)");
  }
  for (const InducedP3& t : induced_p3s(g)) {
    const EdgeIndex a = g.edge_index(t.u, t.centre);
    const EdgeIndex b = g.edge_index(t.centre, t.w);
    if (head_at(g.edge(a), o.dir[a], t.centre) !=
        head_at(g.edge(b), o.dir[b], t.centre)) {
      return {false, t};
    }
  }
  return {};
}

// Breadth-first closure of the forcing rule from one arc: in an induced P3
// x-v-w the edges xv and vw both point at v or both point away from v. The
// oriented domain is the class of the seed edge.
inline Orientation partial_orientation(const Graph& g, Arc seed) {
  const auto seed_edge = g.find_edge(seed.tail, seed.head);
  if (!seed_edge) throw ContractError("seed arc is not an edge of the graph");
  Orientation o = Orientation::unset(g.num_edges());
  o.dir[*seed_edge] = direction_of(g.edge(*seed_edge), seed);
  std::deque<EdgeIndex> queue{*seed_edge};
  while (!queue.empty()) {
    const EdgeIndex cur = queue.front();
    queue.pop_front();
    const Edge& ce = g.edge(cur);
    for (Vertex shared : {ce.u, ce.v}) {
      const Vertex far = ce.other(shared);
      const bool head = head_at(ce, o.dir[cur], shared);
      for (Vertex w : g.neighbours(shared)) {
        if (w == far || g.adjacent(far, w)) continue;
        const EdgeIndex next = g.edge_index(shared, w);
        const Direction want = direction_with_head(g.edge(next), shared, head);
        if (o.dir[next] == Direction::kUnset) {
          o.dir[next] = want;
          queue.push_back(next);
        } else if (o.dir[next] != want) {
          throw InfeasibleError(
              "edge " + g.label(g.edge(next).u) + "-" +
                  g.label(g.edge(next).v) + " is forced both ways",
              next);
        }
      }
    }
  }
  return o;
}

struct ClassVerdict {
  bool consistent = true;
  std::optional<EdgeIndex> witness;  // edge forced both ways
};

struct OrientationFeasibility {
  EdgeClassPartition partition;
  std::vector<ClassVerdict> classes;
  bool orientable = true;
  BigInt count = 1;  // 2^k when orientable, else 0

  std::size_t k() const noexcept { return partition.size(); }
};

// Each edge carries a direction bit; every induced P3 becomes a parity
// constraint between its two edges. A class is consistent iff its
// constraints admit a solution.
inline OrientationFeasibility orientability(const Graph& g) {
  OrientationFeasibility out;
  out.partition = compute_classes(g);
  out.classes.assign(out.partition.size(), ClassVerdict{});
  ParityUnionFind<EdgeIndex> puf(g.num_edges());
  for (const InducedP3& t : induced_p3s(g)) {
    const EdgeIndex a = g.edge_index(t.u, t.centre);
    const EdgeIndex b = g.edge_index(t.centre, t.w);
    const auto parity = static_cast<std::uint8_t>(
        (g.edge(a).v == t.centre) ^ (g.edge(b).v == t.centre));
    if (!puf.unite(a, b, parity)) {
      auto& verdict = out.classes[out.partition.class_of[b]];
      if (verdict.consistent) {
        verdict.consistent = false;
        verdict.witness = b;
      }
    }
  }
  for (const auto& v : out.classes) {
    if (!v.consistent) out.orientable = false;
  }
  out.count = out.orientable ? pow2(out.partition.size()) : BigInt(0);
  return out;
}

struct OrientationDecoder {
  EdgeClassPartition partition;
  Orientation base;  // canonical orientation of every class

  Orientation operator()(std::uint64_t mask) const {
    Orientation o = base;
    for (EdgeIndex e = 0; e < o.dir.size(); ++e) {
      if ((mask >> partition.class_of[e]) & 1u) {
        o.dir[e] = o.dir[e] == Direction::kForward ? Direction::kReverse
                                                   : Direction::kForward;
      }
    }
    return o;
  }
};

using OrientationRange = MaskRange<Orientation, OrientationDecoder>;

// All 2^k quasi-transitive orientations. Bit i of the stream index reverses
// class i relative to its canonical orientation, generated from the class's
// least edge pointing low -> high.
inline OrientationRange enumerate_orientations(
    const Graph& g, std::size_t cap = kDefaultEnumerationCap) {
  OrientationFeasibility feas = orientability(g);
  if (!feas.orientable) {
    throw RefusalError("graph is not quasi-transitively orientable");
  }
  const std::size_t k = feas.k();
  if (k > cap || k >= 63) {
    throw RefusalError("enumeration refused: k=" + std::to_string(k) +
                           " exceeds cap " + std::to_string(cap),
                       k);
  }
  Orientation base = Orientation::unset(g.num_edges());
  for (const auto& cls : feas.partition.classes) {
    const Edge& least = g.edge(cls.front());
    const Orientation gamma = partial_orientation(g, Arc{least.u, least.v});
    for (EdgeIndex e : cls) base.dir[e] = gamma.dir[e];
  }
  return OrientationRange(
      std::uint64_t{1} << k,
      OrientationDecoder{std::move(feas.partition), std::move(base)});
}

// Whether f is oriented by the partial orientation generated from e. Both
// classes must be consistent.
inline bool same_gamma_class(const Graph& g, EdgeIndex e, EdgeIndex f) {
  if (e >= g.num_edges() || f >= g.num_edges()) {
    throw ContractError("unknown edge index");
  }
  const OrientationFeasibility feas = orientability(g);
  for (EdgeIndex x : {e, f}) {
    const auto& verdict = feas.classes[feas.partition.class_of[x]];
    if (!verdict.consistent) {
      throw InfeasibleError("class of edge " + std::to_string(x) +
                                " has no quasi-transitive orientation",
                            *verdict.witness);
    }
  }
  const Edge& seed = g.edge(e);
  return partial_orientation(g, Arc{seed.u, seed.v}).oriented(f);
}

}  // namespace qt2ec

#endif  // QT2EC_ORIENTATION_HPP_
