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

#ifndef QT2EC_GRAPH_IO_HPP_
#define QT2EC_GRAPH_IO_HPP_

#include <cstddef>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "qt2ec/errors.hpp"
#include "qt2ec/graph.hpp"

namespace qt2ec {

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline bool printable_token(std::string_view token) {
  for (unsigned char c : token) {
    if (c < 0x20 || c == 0x7f) return false;
  }
  return true;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' ||
                        s.front() == '\r' || s.front() == '\n')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r' || s.back() == '\n')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace detail

// Parses "u v" lines of arbitrary labels. Blank lines and lines starting with
// '#' are skipped; a "vertices: a b c" line declares (possibly isolated)
// vertices. Dense ids follow first appearance.
inline Graph parse_edge_list(std::string_view text) {
  std::unordered_map<std::string, Vertex> ids;
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  auto intern = [&](std::string_view token, std::size_t line_no) {
    if (!detail::printable_token(token)) {
      throw FormatError("line " + std::to_string(line_no) +
                        ": unparsable vertex label");
    }
    auto [it, inserted] =
        ids.emplace(std::string(token), static_cast<Vertex>(labels.size()));
    if (inserted) labels.emplace_back(token);
    return it->second;
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = detail::trim(text.substr(pos, end - pos));
    ++line_no;
    pos = end + 1;
    if (line.empty() || line.front() == '#') continue;
    if (line.starts_with("vertices:")) {
      for (auto token : detail::split_ws(line.substr(9))) {
        intern(token, line_no);
      }
      continue;
    }
    auto tokens = detail::split_ws(line);
    if (tokens.size() != 2) {
      throw FormatError("line " + std::to_string(line_no) +
                        ": expected two vertex labels, got " +
                        std::to_string(tokens.size()));
    }
    if (tokens[0] == tokens[1]) {
      throw FormatError("line " + std::to_string(line_no) + ": self-loop at '" +
                        std::string(tokens[0]) + "'");
    }
    const Vertex a = intern(tokens[0], line_no);
    const Vertex b = intern(tokens[1], line_no);
    edges.emplace_back(a, b);
  }
  const std::size_t n = labels.size();
  return Graph(n, edges, std::move(labels));
}

// One "u v" line per edge, using labels. A leading "vertices:" header is
// written when isolated vertices exist or when first appearance in the edge
// lines would not reproduce the ids, so the output parses back unchanged.
inline std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  std::vector<Vertex> order;
  std::vector<bool> seen(g.num_vertices(), false);
  for (const Edge& e : g.edges()) {
    for (Vertex x : {e.u, e.v}) {
      if (!seen[x]) {
        seen[x] = true;
        order.push_back(x);
      }
    }
  }
  bool header = order.size() != g.num_vertices();
  for (std::size_t i = 0; i < order.size() && !header; ++i) {
    header = order[i] != i;
  }
  if (header) {
    out << "vertices:";
    for (Vertex v = 0; v < g.num_vertices(); ++v) out << ' ' << g.label(v);
    out << '\n';
  }
  for (const Edge& e : g.edges()) {
    out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
  }
  return out.str();
}

// Basic graph6: N(n) followed by the upper triangle, column by column
// (x(0,1), x(0,2), x(1,2), x(0,3), ...), six bits per byte, offset 63.
inline Graph parse_graph6(std::string_view text) {
  text = detail::trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  for (unsigned char c : text) {
    if (c < 63 || c > 126) {
      throw FormatError("graph6: invalid character code " +
                        std::to_string(static_cast<int>(c)));
    }
  }
  if (text.empty()) throw FormatError("graph6: empty input");

  std::size_t pos = 0;
  auto take = [&]() -> std::uint64_t {
    if (pos >= text.size()) throw FormatError("graph6: truncated header");
    return static_cast<std::uint64_t>(text[pos++] - 63);
  };
  std::uint64_t n = 0;
  if (text[0] != '~') {
    n = take();
  } else if (text.size() > 1 && text[1] == '~') {
    pos = 2;
    for (int i = 0; i < 6; ++i) n = (n << 6) | take();
  } else {
    pos = 1;
    for (int i = 0; i < 3; ++i) n = (n << 6) | take();
  }
  if (n > (1u << 20)) throw FormatError("graph6: vertex count too large");

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  const std::uint64_t available = text.size() - pos;
  if (available < bytes) throw FormatError("graph6: truncated bit stream");
  if (available > bytes) throw FormatError("graph6: trailing data");

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const auto byte = static_cast<unsigned>(text[pos + k / 6] - 63);
      if ((byte >> (5 - k % 6)) & 1u) edges.emplace_back(i, j);
    }
  }
  return Graph(static_cast<std::size_t>(n), edges);
}

inline std::string encode_graph6(const Graph& g) {
  const std::uint64_t n = g.num_vertices();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int s = 12; s >= 0; s -= 6) {
      out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
    }
  } else {
    out += "~~";
    for (int s = 30; s >= 0; s -= 6) {
      out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
    }
  }
  unsigned acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

// Treats a single whitespace-free line as graph6, anything else as an edge
// list.
inline bool looks_like_graph6(std::string_view text) {
  std::string_view body;
  std::size_t lines = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = detail::trim(text.substr(pos, end - pos));
    pos = end + 1;
    if (line.empty()) continue;
    if (line.front() == '#') return false;
    body = line;
    ++lines;
  }
  if (lines != 1) return false;
  for (unsigned char c : body) {
    if (c == ' ' || c == '\t') return false;
  }
  return !body.starts_with("vertices:");
}

}  // namespace qt2ec

#endif  // QT2EC_GRAPH_IO_HPP_
