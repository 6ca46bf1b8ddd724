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

#include <gtest/gtest.h>

#include <string>

#include "qt2ec/errors.hpp"
#include "qt2ec/families.hpp"
#include "qt2ec/graph_io.hpp"
#include "qt2ec/oracle.hpp"

namespace qt2ec {
namespace {

TEST(EdgeListTest, TwoEdgePath) {
  const Graph g = parse_edge_list("a b\nb c");
  EXPECT_EQ(g, Graph(3, {{0, 1}, {1, 2}}));
  EXPECT_EQ(g.labels(), (std::vector<std::string>{"a", "b", "c"}));
}

TEST(EdgeListTest, DuplicateCollapses) {
  EXPECT_EQ(parse_edge_list("a b\nb a"), Graph(2, {{0, 1}}));
}

TEST(EdgeListTest, SelfLoopNamesLine) {
  try {
    parse_edge_list("x y\n\na a\n");
    FAIL() << "expected FormatError";
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos)
        << e.what();
  }
}

TEST(EdgeListTest, WrongTokenCount) {
  EXPECT_THROW(parse_edge_list("a b c\n"), FormatError);
  EXPECT_THROW(parse_edge_list("a\n"), FormatError);
  EXPECT_THROW(parse_edge_list("a \x01\n"), FormatError);
}

TEST(EdgeListTest, CommentsBlankLinesAndVertices) {
  const Graph g = parse_edge_list(
      "# header\n"
      "vertices: p q r s\n"
      "\n"
      "  q   s \r\n");
  EXPECT_EQ(g.num_vertices(), 4u);
  EXPECT_EQ(g, Graph(4, {{1, 3}}));
  EXPECT_EQ(g.label(2), "r");
}

TEST(EdgeListTest, RoundTrip) {
  const Graph g = families::fig1_left();
  const Graph back = parse_edge_list(write_edge_list(g));
  EXPECT_EQ(back, g);
  EXPECT_EQ(back.labels(), g.labels());

  const Graph isolated(3, {{0, 2}});
  EXPECT_EQ(write_edge_list(isolated), "vertices: 0 1 2\n0 2\n");
  EXPECT_EQ(parse_edge_list(write_edge_list(isolated)), isolated);
}

TEST(Graph6Test, HandDecoded) {
  // N = 'D' (n=5); bits 000000 000000 111100 place 04, 14, 24, 34.
  EXPECT_EQ(parse_graph6("D?{"), Graph(5, {{0, 4}, {1, 4}, {2, 4}, {3, 4}}));
  EXPECT_EQ(parse_graph6("A_"), Graph(2, {{0, 1}}));
  EXPECT_EQ(parse_graph6("A?"), Graph(2));
  EXPECT_EQ(parse_graph6("?"), Graph(0));
  EXPECT_EQ(parse_graph6("@"), Graph(1));
  EXPECT_EQ(parse_graph6(">>graph6<<A_\n"), Graph(2, {{0, 1}}));
}

TEST(Graph6Test, AgreesWithIndependentEncoder) {
  // Strings produced by networkx.to_graph6_bytes.
  EXPECT_EQ(encode_graph6(families::cycle(5)), "Dhc");
  EXPECT_EQ(encode_graph6(families::complete(4)), "C~");
  EXPECT_EQ(encode_graph6(families::path(3)), "Bg");
  EXPECT_EQ(encode_graph6(families::complete(63)).substr(0, 8), "~??~~~~~");
  EXPECT_EQ(encode_graph6(families::complete(63)).size(), 330u);
  EXPECT_EQ(encode_graph6(Graph(100)).substr(0, 8), "~?@c????");
  EXPECT_EQ(encode_graph6(Graph(100)).size(), 829u);
}

TEST(Graph6Test, LongHeaderRoundTrip) {
  const Graph k63 = families::complete(63);
  EXPECT_EQ(parse_graph6(encode_graph6(k63)), k63);
  const Graph c70 = families::cycle(70);
  EXPECT_EQ(parse_graph6(encode_graph6(c70)), c70);
}

TEST(Graph6Test, Errors) {
  EXPECT_THROW(parse_graph6("D?"), FormatError);     // truncated
  EXPECT_THROW(parse_graph6("A_?"), FormatError);    // trailing
  EXPECT_THROW(parse_graph6("D ?{"), FormatError);   // char 32
  EXPECT_THROW(parse_graph6("D?\x7f"), FormatError);  // char 127
  EXPECT_THROW(parse_graph6(""), FormatError);
  EXPECT_THROW(parse_graph6("~?"), FormatError);
}

TEST(Graph6Test, RoundTripsEveryGraphOnFiveVertices) {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto stream = oracle::enumerate_labeled_graphs(n, false);
    std::size_t seen = 0;
    while (auto g = stream.next()) {
      ++seen;
      EXPECT_EQ(parse_graph6(encode_graph6(*g)), *g);
    }
    EXPECT_EQ(seen, std::size_t{1} << (n * (n - 1) / 2));
  }
}

TEST(Graph6Test, Detection) {
  EXPECT_TRUE(looks_like_graph6("D?{\n"));
  EXPECT_TRUE(looks_like_graph6("\n  Dhc  \n"));
  EXPECT_FALSE(looks_like_graph6("a b\n"));
  EXPECT_FALSE(looks_like_graph6("ab\ncd\n"));
  EXPECT_FALSE(looks_like_graph6("# c\nDhc\n"));
  EXPECT_FALSE(looks_like_graph6("vertices:a\n"));
}

}  // namespace
}  // namespace qt2ec
