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

#ifndef QT2EC_FAMILIES_HPP_
#define QT2EC_FAMILIES_HPP_

#include <charconv>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qt2ec/errors.hpp"
#include "qt2ec/graph.hpp"

namespace qt2ec::families {

inline std::vector<std::string> numbered_labels(std::string_view prefix,
                                                std::size_t first,
                                                std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(std::string(prefix) + std::to_string(first + i));
  }
  return out;
}

// P_k on k vertices 0..k-1.
inline Graph path(std::size_t k) {
  if (k < 1) throw ContractError("path: k must be at least 1");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
  return Graph(k, edges);
}

inline Graph cycle(std::size_t k) {
  if (k < 3) throw ContractError("cycle: k must be at least 3");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < k; ++i) {
    edges.emplace_back(i, static_cast<Vertex>((i + 1) % k));
  }
  return Graph(k, edges);
}

inline Graph complete(std::size_t n) {
  if (n < 1) throw ContractError("complete: n must be at least 1");
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  }
  return Graph(n, edges);
}

// Parts occupy consecutive id ranges in the given order.
inline Graph complete_multipartite(const std::vector<std::size_t>& parts) {
  if (parts.empty()) throw ContractError("complete_multipartite: no parts");
  std::vector<std::size_t> part_of;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] == 0) {
      throw ContractError("complete_multipartite: parts must be nonempty");
    }
    part_of.insert(part_of.end(), parts[i], i);
  }
  std::vector<Edge> edges;
  for (Vertex a = 0; a < part_of.size(); ++a) {
    for (Vertex b = a + 1; b < part_of.size(); ++b) {
      if (part_of[a] != part_of[b]) edges.emplace_back(a, b);
    }
  }
  return Graph(part_of.size(), edges);
}

// g plus one new vertex (id n) adjacent to every vertex of g.
inline Graph join_with_k1(const Graph& g) {
  const auto n = static_cast<Vertex>(g.num_vertices());
  std::vector<Edge> edges = g.edges();
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, n);
  std::vector<std::string> labels;
  if (g.has_labels()) {
    labels = g.labels();
    labels.push_back("apex");
  }
  return Graph(n + 1, edges, std::move(labels));
}

// Threshold graph on v1..vn: start from K1, add a universal vertex, then
// alternately an isolated and a universal vertex. Vertex i (0-based) is
// universal to its predecessors iff i is odd.
inline Graph threshold_alternating(std::size_t n) {
  if (n < 2 || n % 2 != 0) {
    throw ContractError("threshold_alternating: n must be even and >= 2");
  }
  std::vector<Edge> edges;
  for (Vertex i = 1; i < n; i += 2) {
    for (Vertex j = 0; j < i; ++j) edges.emplace_back(j, i);
  }
  return Graph(n, edges, numbered_labels("v", 1, n));
}

// Path w0..w_{k-1} with a triangle u v w0 hung on w0.
// Ids: u = 0, v = 1, w_i = 2 + i. For k = 1 this is K3.
inline Graph triangle_with_tail(std::size_t k) {
  if (k < 1) throw ContractError("triangle_with_tail: k must be at least 1");
  std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 2}};
  for (Vertex i = 0; i + 1 < k; ++i) edges.emplace_back(2 + i, 3 + i);
  std::vector<std::string> labels{"u", "v"};
  for (auto& l : numbered_labels("w", 0, k)) labels.push_back(l);
  return Graph(k + 2, edges, std::move(labels));
}

// Two disjoint paths v0..v_{k-1} and v0'..v_{k-1}' plus a universal vertex u.
// Ids: v_i = i, v_i' = k + i, u = 2k.
inline Graph double_path_apex(std::size_t k) {
  if (k < 2) throw ContractError("double_path_apex: k must be at least 2");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < k; ++i) {
    edges.emplace_back(i, i + 1);
    edges.emplace_back(k + i, k + i + 1);
  }
  const auto apex = static_cast<Vertex>(2 * k);
  for (Vertex i = 0; i < apex; ++i) edges.emplace_back(i, apex);
  std::vector<std::string> labels = numbered_labels("v", 0, k);
  for (std::size_t i = 0; i < k; ++i) {
    labels.push_back("v" + std::to_string(i) + "'");
  }
  labels.push_back("u");
  return Graph(2 * k + 1, edges, std::move(labels));
}

// Left graph of the two-graph colouring figure, on v1..v6 (ids 0..5).
inline Graph fig1_left() {
  const std::vector<Edge> edges{{0, 1}, {1, 2}, {1, 5}, {3, 4}, {0, 3}, {1, 4},
                                {2, 3}, {3, 5}, {0, 4}, {2, 4}, {0, 5}, {4, 5}};
  return Graph(6, edges, numbered_labels("v", 1, 6));
}

// Right graph of the same figure: a 6-cycle a..f with chords ae, bf, ce, df.
inline Graph fig1_right() {
  const std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5},
                                {0, 5}, {0, 4}, {1, 5}, {2, 4}, {3, 5}};
  return Graph(6, edges, {"a", "b", "c", "d", "e", "f"});
}

// K4 minus the edge 2-3.
inline Graph k4_minus_e() {
  return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

// Parses "name[,int...]" and builds the graph. join_with_k1 takes a nested
// spec: "join_with_k1,cycle,5".
inline Graph make_family(std::string_view spec) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = spec.find(',', pos);
    tokens.push_back(spec.substr(pos, comma - pos));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  const std::string_view name = tokens.front();
  if (name == "join_with_k1") {
    if (tokens.size() < 2) throw ContractError("join_with_k1 needs a graph");
    return join_with_k1(make_family(spec.substr(name.size() + 1)));
  }
  std::vector<std::size_t> args;
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(tokens[i].data(),
                                     tokens[i].data() + tokens[i].size(), value);
    if (ec != std::errc() || ptr != tokens[i].data() + tokens[i].size()) {
      throw ContractError("family '" + std::string(name) +
                          "': bad integer parameter '" +
                          std::string(tokens[i]) + "'");
    }
    args.push_back(value);
  }
  auto need = [&](std::size_t count) {
    if (args.size() != count) {
      throw ContractError("family '" + std::string(name) + "' takes " +
                          std::to_string(count) + " parameter(s)");
    }
  };
  if (name == "fig1_left") {
    need(0);
    return fig1_left();
  }
  if (name == "fig1_right") {
    need(0);
    return fig1_right();
  }
  if (name == "k4_minus_e") {
    need(0);
    return k4_minus_e();
  }
  if (name == "threshold") {
    need(1);
    return threshold_alternating(args[0]);
  }
  if (name == "triangle_with_tail") {
    need(1);
    return triangle_with_tail(args[0]);
  }
  if (name == "double_path_apex") {
    need(1);
    return double_path_apex(args[0]);
  }
  if (name == "path") {
    need(1);
    return path(args[0]);
  }
  if (name == "cycle") {
    need(1);
    return cycle(args[0]);
  }
  if (name == "complete") {
    need(1);
    return complete(args[0]);
  }
  if (name == "complete_multipartite") return complete_multipartite(args);
  throw ContractError("unknown family '" + std::string(name) + "'");
}

inline std::vector<std::string> family_names() {
  return {"fig1_left", "fig1_right",        "k4_minus_e",
          "threshold", "triangle_with_tail", "double_path_apex",
          "path",      "cycle",             "complete",
          "complete_multipartite",          "join_with_k1"};
}

}  // namespace qt2ec::families

#endif  // QT2EC_FAMILIES_HPP_
