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

#ifndef QT2EC_DOT_HPP_
#define QT2EC_DOT_HPP_

#include <array>
#include <sstream>
#include <string>

#include "qt2ec/colouring.hpp"
#include "qt2ec/edge_classes.hpp"
#include "qt2ec/errors.hpp"
#include "qt2ec/graph.hpp"
#include "qt2ec/orientation.hpp"

namespace qt2ec {

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

inline void dot_nodes(std::ostringstream& out, const Graph& g) {
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.has_labels()) {
      out << "  " << v << " [label=\"" << dot_escape(g.label(v)) << "\"];\n";
    } else if (g.degree(v) == 0) {
      out << "  " << v << ";\n";
    }
  }
}

}  // namespace detail

inline std::string to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph {\n";
  detail::dot_nodes(out, g);
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

inline constexpr std::array<const char*, 4> kClassStyles{"solid", "dashed",
                                                         "dotted", "bold"};

// One edge style per class, cycling through kClassStyles.
inline std::string to_dot(const Graph& g, const EdgeClassPartition& p) {
  if (p.num_edges() != g.num_edges()) {
    throw ContractError("to_dot: partition does not match the graph");
  }
  std::ostringstream out;
  out << "graph {\n";
  detail::dot_nodes(out, g);
  for (EdgeIndex i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edge(i);
    out << "  " << e.u << " -- " << e.v << " [style="
        << kClassStyles[p.class_of[i] % kClassStyles.size()]
        << ", class=" << p.class_of[i] << "];\n";
  }
  out << "}\n";
  return out.str();
}

// R edges dotted, B edges solid.
inline std::string to_dot(const Graph& g, const EdgeColouring& c) {
  if (c.colour.size() != g.num_edges()) {
    throw ContractError("to_dot: colouring does not match the graph");
  }
  std::ostringstream out;
  out << "graph {\n";
  detail::dot_nodes(out, g);
  for (EdgeIndex i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edge(i);
    out << "  " << e.u << " -- " << e.v << " [style="
        << (c.colour[i] == Colour::kRed ? "dotted" : "solid") << "];\n";
  }
  out << "}\n";
  return out.str();
}

// Oriented edges become arcs; edges outside a partial orientation are drawn
// without arrowheads.
inline std::string to_dot(const Graph& g, const Orientation& o) {
  if (o.dir.size() != g.num_edges()) {
    throw ContractError("to_dot: orientation does not match the graph");
  }
  std::ostringstream out;
  out << "digraph {\n";
  detail::dot_nodes(out, g);
  for (EdgeIndex i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edge(i);
    if (o.dir[i] == Direction::kUnset) {
      out << "  " << e.u << " -> " << e.v << " [dir=none, style=dashed];\n";
    } else {
      const Arc a = arc_of(e, o.dir[i]);
      out << "  " << a.tail << " -> " << a.head << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace qt2ec

#endif  // QT2EC_DOT_HPP_
