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

#ifndef QT2EC_COLOURING_HPP_
#define QT2EC_COLOURING_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qt2ec/edge_classes.hpp"
#include "qt2ec/errors.hpp"
#include "qt2ec/graph.hpp"
#include "qt2ec/mask_range.hpp"

namespace qt2ec {

using BigInt = boost::multiprecision::cpp_int;

enum class Colour : std::uint8_t { kRed = 0, kBlue = 1 };

inline char colour_char(Colour c) { return c == Colour::kRed ? 'R' : 'B'; }

// Total map E(G) -> {R, B}, indexed by edge index.
struct EdgeColouring {
  std::vector<Colour> colour;

  static EdgeColouring monochrome(std::size_t m, Colour c) {
    return {std::vector<Colour>(m, c)};
  }

  EdgeColouring swapped() const {
    EdgeColouring out = *this;
    for (auto& c : out.colour) {
      c = c == Colour::kRed ? Colour::kBlue : Colour::kRed;
    }
    return out;
  }

  bool is_monochrome() const {
    for (auto c : colour) {
      if (c != colour.front()) return false;
    }
    return true;
  }

  friend bool operator==(const EdgeColouring&, const EdgeColouring&) = default;
};

struct ColouringCheck {
  bool valid = true;
  std::optional<InducedP3> witness;  // a bichromatic induced P3
};

inline ColouringCheck is_quasi_transitive_colouring(const Graph& g,
                                                    const EdgeColouring& c) {
  if (c.colour.size() != g.num_edges()) {
    throw ContractError("colouring is not total on E(G)");
  }
  for (const InducedP3& t : induced_p3s(g)) {
    if (c.colour[g.edge_index(t.u, t.centre)] !=
        c.colour[g.edge_index(t.centre, t.w)]) {
      return {false, t};
    }
  }
  return {};
}

inline BigInt pow2(std::size_t k) {
  BigInt one = 1;
  return one << k;
}

// 2^k where k is the number of edge classes; the empty map for edgeless g.
inline BigInt count_colourings(const Graph& g) {
  return pow2(compute_classes(g).size());
}

inline constexpr std::size_t kDefaultEnumerationCap = 20;

// Colouring for a class bitmask: bit i set means class i is blue.
inline EdgeColouring colouring_from_mask(const EdgeClassPartition& p,
                                         std::uint64_t mask) {
  EdgeColouring c{std::vector<Colour>(p.num_edges(), Colour::kRed)};
  for (EdgeIndex e = 0; e < p.num_edges(); ++e) {
    if ((mask >> p.class_of[e]) & 1u) c.colour[e] = Colour::kBlue;
  }
  return c;
}

struct ColouringDecoder {
  EdgeClassPartition partition;
  EdgeColouring operator()(std::uint64_t mask) const {
    return colouring_from_mask(partition, mask);
  }
};

using ColouringRange = MaskRange<EdgeColouring, ColouringDecoder>;

// All 2^k quasi-transitive colourings in class-bitmask order (all-R first).
inline ColouringRange enumerate_colourings(
    const Graph& g, std::size_t cap = kDefaultEnumerationCap) {
  EdgeClassPartition p = compute_classes(g);
  const std::size_t k = p.size();
  if (k > cap || k >= 63) {
    throw RefusalError("enumeration refused: k=" + std::to_string(k) +
                           " exceeds cap " + std::to_string(cap),
                       k);
  }
  return ColouringRange(std::uint64_t{1} << k, ColouringDecoder{std::move(p)});
}

enum class Colourability {
  kTrivialOnly,
  kUniquelyColourable,
  kProperlyColourable,
};

// kUniquelyColourable is reported for k == 2 and kProperlyColourable for
// k >= 3; properly() holds for both.
struct ColourabilityClass {
  Colourability kind = Colourability::kTrivialOnly;
  std::size_t k = 0;
  BigInt count = 1;

  bool properly() const noexcept { return k >= 2; }
  bool uniquely() const noexcept { return k == 2; }

  std::string to_string() const {
    switch (kind) {
      case Colourability::kTrivialOnly:
        return "TrivialOnly";
      case Colourability::kUniquelyColourable:
        return "UniquelyColourable";
      case Colourability::kProperlyColourable:
        return "ProperlyColourable(" + std::to_string(k) + ")";
    }
    return "?";
  }
};

inline void require_connected_with_edges(const Graph& g, const char* what) {
  if (g.num_edges() == 0) {
    throw RefusalError(std::string(what) + ": graph has no edges");
  }
  if (!is_connected(g)) {
    throw RefusalError(std::string(what) + ": graph is not connected");
  }
}

inline ColourabilityClass classify_colourability(const Graph& g) {
  require_connected_with_edges(g, "classify");
  const std::size_t k = compute_classes(g).size();
  ColourabilityClass out;
  out.k = k;
  out.count = pow2(k);
  out.kind = k == 1   ? Colourability::kTrivialOnly
             : k == 2 ? Colourability::kUniquelyColourable
                      : Colourability::kProperlyColourable;
  return out;
}

// The three conditions on a candidate vertex set H: G[H] connected,
// 2 <= |H| <= n-1, and every outside vertex sees all of H or none of it.
inline bool is_homogeneous_witness(const Graph& g, const VertexBitset& h) {
  const std::size_t size = h.count();
  if (size < 2 || size + 1 > g.num_vertices()) return false;
  if (!is_module_set(g, h)) return false;
  const auto vertices = to_vertices(h);
  return is_connected(induced_subgraph(g, vertices).graph);
}

inline bool is_homogeneous_witness(const Graph& g,
                                   std::span<const Vertex> h) {
  return is_homogeneous_witness(g, to_bitset(g, h));
}

// Class vertex sets that are proper subsets of V(G) and satisfy the witness
// conditions, in class-id order.
inline std::vector<std::vector<Vertex>> homogeneous_witness_classes(
    const Graph& g, const EdgeClassPartition& p) {
  std::vector<std::vector<Vertex>> out;
  for (const auto& vs : p.vertex_sets) {
    if (vs.size() == g.num_vertices()) continue;
    if (is_homogeneous_witness(g, vs)) out.push_back(vs);
  }
  return out;
}

inline void require_connected(const Graph& g, const char* what) {
  if (!is_connected(g)) {
    throw RefusalError(std::string(what) + ": graph is not connected");
  }
}

inline std::optional<std::vector<Vertex>> find_homogeneous_witness(
    const Graph& g) {
  require_connected(g, "witness");
  if (g.num_vertices() < 2) {
    throw ContractError("witness: graph needs at least two vertices");
  }
  auto found = homogeneous_witness_classes(g, compute_classes(g));
  if (found.empty()) return std::nullopt;
  return found.front();
}

inline std::size_t count_homogeneous_witness_classes(const Graph& g) {
  require_connected(g, "witness count");
  return homogeneous_witness_classes(g, compute_classes(g)).size();
}

}  // namespace qt2ec

#endif  // QT2EC_COLOURING_HPP_
