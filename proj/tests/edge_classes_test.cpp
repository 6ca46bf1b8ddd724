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

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "qt2ec/edge_classes.hpp"
#include "qt2ec/errors.hpp"
#include "qt2ec/families.hpp"
#include "qt2ec/oracle.hpp"

namespace qt2ec {
namespace {

Vertex by_label(const Graph& g, const std::string& name) {
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.label(v) == name) return v;
  }
  ADD_FAILURE() << "no vertex " << name;
  return 0;
}

EdgeIndex edge_named(const Graph& g, const std::string& a,
                     const std::string& b) {
  return g.edge_index(by_label(g, a), by_label(g, b));
}

std::set<std::string> edge_names(const Graph& g,
                                 const std::vector<EdgeIndex>& edges) {
  std::set<std::string> out;
  for (EdgeIndex e : edges) {
    out.insert(g.label(g.edge(e).u) + g.label(g.edge(e).v));
  }
  return out;
}

TEST(ComputeClassesTest, PathIsOneClass) {
  const auto p = compute_classes(families::path(3));
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p.classes[0], (std::vector<EdgeIndex>{0, 1}));
  EXPECT_EQ(p.vertex_sets[0], (std::vector<Vertex>{0, 1, 2}));
}

TEST(ComputeClassesTest, K4MinusE) {
  const Graph g = families::k4_minus_e();
  const auto p = compute_classes(g);
  ASSERT_EQ(p.size(), 3u);
  // Edges 01 02 03 12 13; class ids follow the least edge index.
  EXPECT_EQ(p.classes[0], (std::vector<EdgeIndex>{0}));
  EXPECT_EQ(p.classes[1], (std::vector<EdgeIndex>{1, 2}));
  EXPECT_EQ(p.classes[2], (std::vector<EdgeIndex>{3, 4}));
  EXPECT_EQ(p.vertex_sets[1], (std::vector<Vertex>{0, 2, 3}));
  EXPECT_EQ(p.class_of, (std::vector<ClassId>{0, 1, 1, 2, 2}));
}

TEST(ComputeClassesTest, Threshold6) {
  EXPECT_EQ(compute_classes(families::threshold_alternating(6)).size(), 3u);
}

TEST(ComputeClassesTest, Fig1Left) {
  const Graph g = families::fig1_left();
  ASSERT_EQ(g.num_edges(), 12u);
  const auto p = compute_classes(g);
  ASSERT_EQ(p.size(), 4u);
  std::vector<std::size_t> sizes;
  for (const auto& cls : p.classes) sizes.push_back(cls.size());
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 2, 3, 6}));

  const auto& s12 = class_of_edge(g, p, by_label(g, "v1"), by_label(g, "v2"));
  EXPECT_EQ(edge_names(g, s12),
            (std::set<std::string>{"v1v2", "v1v4", "v2v3", "v3v4", "v2v6",
                                   "v4v6"}));
  EXPECT_EQ(edge_names(g, class_of_edge(p, edge_named(g, "v2", "v5"))),
            (std::set<std::string>{"v2v5", "v4v5"}));
  EXPECT_EQ(edge_names(g, class_of_edge(p, edge_named(g, "v1", "v5"))),
            (std::set<std::string>{"v1v5", "v3v5", "v5v6"}));
  EXPECT_EQ(edge_names(g, class_of_edge(p, edge_named(g, "v1", "v6"))),
            (std::set<std::string>{"v1v6"}));
}

TEST(ComputeClassesTest, Fig1RightIsOneClass) {
  const Graph g = families::fig1_right();
  EXPECT_EQ(g.num_edges(), 10u);
  EXPECT_EQ(compute_classes(g).size(), 1u);
}

TEST(ComputeClassesTest, EdgelessGraph) {
  const auto p = compute_classes(Graph(4));
  EXPECT_EQ(p.size(), 0u);
  EXPECT_EQ(p.num_edges(), 0u);
}

TEST(ClassOfEdgeTest, TriangleEdgesAreSingletons) {
  const Graph g = families::complete(3);
  const auto p = compute_classes(g);
  for (EdgeIndex e = 0; e < 3; ++e) {
    EXPECT_EQ(class_of_edge(p, e), (std::vector<EdgeIndex>{e}));
  }
  EXPECT_THROW(class_of_edge(p, 3), ContractError);
  EXPECT_THROW(class_of_edge(families::path(3), compute_classes(families::path(3)), 0, 2),
               ContractError);
}

TEST(ClassOfEdgeTest, TriangleWithTail) {
  for (int k = 2; k <= 6; ++k) {
    const Graph g = families::triangle_with_tail(k);
    const auto p = compute_classes(g);
    const auto& suv = class_of_edge(g, p, by_label(g, "u"), by_label(g, "v"));
    EXPECT_EQ(edge_names(g, suv), (std::set<std::string>{"uv"})) << k;
  }
}

TEST(ClassSubgraphTest, HasExactlyTheClassEdges) {
  const Graph g = families::fig1_left();
  const auto p = compute_classes(g);
  for (const auto& cls : p.classes) {
    const InducedSubgraph sub = class_subgraph(g, cls);
    EXPECT_EQ(sub.graph.num_edges(), cls.size());
    for (const Edge& e : sub.graph.edges()) {
      const auto idx = g.edge_index(sub.original[e.u], sub.original[e.v]);
      EXPECT_TRUE(std::binary_search(cls.begin(), cls.end(), idx));
    }
  }
}

TEST(PartitionLawsTest, C5AllPass) {
  const Graph g = families::cycle(5);
  const auto report = verify_partition_laws(g, compute_classes(g));
  EXPECT_EQ(report.size(), 4u);
  EXPECT_TRUE(report.all_passed());
}

TEST(PartitionLawsTest, SplitPathFailsWithWitness) {
  const Graph g = families::path(3);
  const auto split = partition_from_labels(g, {0, 1});
  const auto report = verify_partition_laws(g, split);
  const CheckRecord* rec = report.find(law::kP3IntraClass);
  ASSERT_NE(rec, nullptr);
  EXPECT_FALSE(rec->passed);
  EXPECT_EQ(rec->witness, nlohmann::json::array({0, 1, 2}));
  EXPECT_EQ(rec->graph6, "Bg");
  const CheckRecord* dichromatic = report.find(law::kDichromatic);
  ASSERT_NE(dichromatic, nullptr);
  EXPECT_FALSE(dichromatic->passed);
}

TEST(PartitionLawsTest, DisconnectedClassDetected) {
  // 2K2 forced into one class: laws about P3s hold but connectivity fails.
  const Graph g(4, {{0, 1}, {2, 3}});
  const auto merged = partition_from_labels(g, {7, 7});
  const auto report = verify_partition_laws(g, merged);
  EXPECT_FALSE(report.find(law::kClassConnected)->passed);
  EXPECT_TRUE(report.find(law::kP3IntraClass)->passed);
}

TEST(PartitionLawsTest, RepeatedVertexSetDetected) {
  // K4 split into its three perfect matchings; every class spans V.
  const Graph g = families::complete(4);
  const auto p = partition_from_labels(g, {0, 1, 2, 2, 1, 0});
  EXPECT_FALSE(verify_partition_laws(g, p).find(law::kDistinctVertexSets)->passed);
}

TEST(PartitionLawsTest, MismatchedPartitionIsContractError) {
  const auto p = compute_classes(families::path(3));
  EXPECT_THROW(verify_partition_laws(families::complete(3), p), ContractError);
  EXPECT_THROW(partition_from_labels(families::path(3), {0}), ContractError);
}

TEST(PartitionFromLabelsTest, RenumbersByLeastEdge) {
  const Graph g = families::complete(4);
  const auto p = partition_from_labels(g, {9, 4, 9, 4, 2, 2});
  EXPECT_EQ(p.class_of, (std::vector<ClassId>{0, 1, 0, 1, 2, 2}));
  EXPECT_EQ(p.classes[1], (std::vector<EdgeIndex>{1, 3}));
}

// Property: over every graph on at most 5 vertices, classes are ordered by
// least edge, each is the brute-force minimal closed set, and the laws hold.
TEST(ComputeClassesProperty, MatchesBruteForceOnSmallCorpus) {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto stream = oracle::enumerate_labeled_graphs(n, false);
    while (auto g = stream.next()) {
      const auto p = compute_classes(*g);
      for (ClassId c = 1; c < p.size(); ++c) {
        EXPECT_LT(p.classes[c - 1].front(), p.classes[c].front());
      }
      for (EdgeIndex e = 0; e < g->num_edges(); ++e) {
        const auto brute = oracle::brute_force_minimal_closed_set(*g, e);
        ASSERT_EQ(brute.edges, class_of_edge(p, e)) << encode_graph6(*g);
        EXPECT_EQ(brute.minimum_count, 1u);
      }
      EXPECT_TRUE(verify_partition_laws(*g, p).all_passed())
          << encode_graph6(*g);
    }
  }
}

}  // namespace
}  // namespace qt2ec
