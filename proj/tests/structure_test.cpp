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
#include <vector>

#include "qt2ec/errors.hpp"
#include "qt2ec/families.hpp"
#include "qt2ec/oracle.hpp"
#include "qt2ec/structure.hpp"

namespace qt2ec {
namespace {

using Parts = std::vector<std::vector<Vertex>>;

TEST(ClassPairRelationTest, TriangleWithTailIsNested) {
  const Graph g = families::triangle_with_tail(3);
  const auto p = compute_classes(g);
  ASSERT_EQ(p.size(), 2u);
  const auto rel = class_pair_relation(g, p, 0, 1);
  EXPECT_EQ(rel.tag, PairTag::kNested);
  EXPECT_STREQ(to_string(rel.tag), "nested");
}

TEST(ClassPairRelationTest, K4MinusECrossing) {
  const Graph g = families::k4_minus_e();
  const auto p = compute_classes(g);
  // Classes 1 = {02,03} and 2 = {12,13}.
  const auto rel = class_pair_relation(p, 1, 2);
  EXPECT_EQ(rel.tag, PairTag::kCrossing);
  EXPECT_EQ(rel.only_first, (std::vector<Vertex>{0}));
  EXPECT_EQ(rel.only_second, (std::vector<Vertex>{1}));
  EXPECT_EQ(rel.shared, (std::vector<Vertex>{2, 3}));
}

TEST(ClassPairRelationTest, DoublePathApexPathsAreDisjoint) {
  const Graph g = families::double_path_apex(3);
  const auto p = compute_classes(g);
  ASSERT_EQ(p.size(), 3u);
  const ClassId first = p.class_of[g.edge_index(0, 1)];
  const ClassId second = p.class_of[g.edge_index(3, 4)];
  const auto rel = class_pair_relation(p, first, second);
  EXPECT_EQ(rel.tag, PairTag::kDisjoint);
}

TEST(ClassPairRelationTest, Errors) {
  const auto p = compute_classes(families::k4_minus_e());
  EXPECT_THROW(class_pair_relation(p, 1, 1), ContractError);
  EXPECT_THROW(class_pair_relation(p, 0, 3), ContractError);
  EXPECT_THROW(class_pair_relation(families::path(3), p, 0, 1),
               ContractError);
}

TEST(CrossingLemmasTest, K4MinusEAllPass) {
  const Graph g = families::k4_minus_e();
  const auto p = compute_classes(g);
  const auto report = check_crossing_lemmas(g, p, 1, 2);
  EXPECT_EQ(report.size(), 5u);
  EXPECT_TRUE(report.all_passed());
  // The A-B edge 01 is the remaining class.
  EXPECT_EQ(p.class_of[g.edge_index(0, 1)], 0u);
  EXPECT_EQ(p.classes[0].size(), 1u);
}

TEST(CrossingLemmasTest, RejectsNonCrossingPair) {
  const Graph g = families::triangle_with_tail(3);
  const auto p = compute_classes(g);
  EXPECT_THROW(check_crossing_lemmas(g, p, 0, 1), ContractError);
}

TEST(CrossingLemmasTest, FabricatedPartitionFailsEdgeTouch) {
  // Path 0-1-2-3 with classes {01,12} and {23}: I = {2}, and 01 avoids I.
  const Graph g = families::path(4);
  const auto p = partition_from_labels(g, {0, 0, 1});
  ASSERT_EQ(class_pair_relation(p, 0, 1).tag, PairTag::kCrossing);
  const auto report = check_crossing_lemmas(g, p, 0, 1);
  const CheckRecord* touch = report.find(lemma::kEdgesTouchShared);
  ASSERT_NE(touch, nullptr);
  EXPECT_FALSE(touch->passed);
  EXPECT_EQ(touch->witness["edge"], nlohmann::json::array({0, 1}));
  EXPECT_EQ(touch->witness["class"], 0);
  EXPECT_FALSE(report.all_passed());
}

TEST(CrossingLemmasTest, FabricatedPartitionFailsOuterClass) {
  // K4-e, pair {01} and {02,03}: A = {1}, B = {2,3}. Splitting the A-B
  // class {12,13} in two breaks (e).
  const Graph g = families::k4_minus_e();
  const auto p = partition_from_labels(g, {0, 1, 1, 2, 3});
  ASSERT_EQ(class_pair_relation(p, 0, 1).tag, PairTag::kCrossing);
  const auto report = check_crossing_lemmas(g, p, 0, 1);
  EXPECT_FALSE(report.find(lemma::kOuterEdgesOneClass)->passed);
}

TEST(CrossingLemmasProperty, HoldOnEveryCrossingPairUpToSixVertices) {
  std::size_t pairs = 0;
  for (std::size_t n = 3; n <= 6; ++n) {
    auto stream = oracle::enumerate_labeled_graphs(n, true);
    while (auto g = stream.next()) {
      const auto p = compute_classes(*g);
      for (ClassId c = 0; c < p.size(); ++c) {
        for (ClassId d = c + 1; d < p.size(); ++d) {
          if (class_pair_relation(p, c, d).tag != PairTag::kCrossing) continue;
          ++pairs;
          const auto report = check_crossing_lemmas(*g, p, c, d);
          ASSERT_TRUE(report.all_passed())
              << encode_graph6(*g) << " " << report.to_jsonl(false);
        }
      }
    }
  }
  EXPECT_GT(pairs, 0u);
}

TEST(ThreeClassTest, K4MinusEIsCompleteTripartite) {
  const auto out = three_class_classification(families::k4_minus_e());
  ASSERT_TRUE(out.complete_tripartite());
  EXPECT_EQ(*out.tripartite_parts, (Parts{{0}, {1}, {2, 3}}));
  EXPECT_FALSE(out.spanning_class.has_value());
}

TEST(ThreeClassTest, MultipartiteGeneratorAgrees) {
  const Graph g = families::complete_multipartite({1, 1, 2});
  EXPECT_EQ(g, families::k4_minus_e());
  EXPECT_TRUE(three_class_classification(g).complete_tripartite());
}

TEST(ThreeClassTest, DoublePathApexHasSpanningStar) {
  for (std::size_t k = 2; k <= 5; ++k) {
    const Graph g = families::double_path_apex(k);
    const auto p = compute_classes(g);
    const auto out = three_class_classification(g, p);
    ASSERT_TRUE(out.spanning_class.has_value()) << k;
    // The class of the apex edge u-v0.
    const Vertex apex = static_cast<Vertex>(2 * k);
    EXPECT_EQ(*out.spanning_class, p.class_of[g.edge_index(0, apex)]);
    EXPECT_FALSE(out.complete_tripartite());
  }
}

TEST(ThreeClassTest, Errors) {
  EXPECT_THROW(three_class_classification(families::path(3)), ContractError);
  // Two disjoint paths give three classes but no connected graph.
  const Graph split(6, {{0, 1}, {2, 3}, {4, 5}});
  EXPECT_THROW(three_class_classification(split), ContractError);
}

TEST(TinyLemmaTest, Examples) {
  const Graph e(4);
  const auto empty = check_tinylemma_instances(e, compute_classes(e));
  ASSERT_EQ(empty.size(), 1u);
  EXPECT_TRUE(empty.all_passed());
  EXPECT_EQ(empty.records()[0].note, "instances=0");

  const Graph k4e = families::k4_minus_e();
  const auto r = check_tinylemma_instances(k4e, compute_classes(k4e));
  EXPECT_TRUE(r.all_passed());
  EXPECT_EQ(r.records()[0].note, "instances=0");
}

TEST(TinyLemmaTest, FabricatedConfigurationIsFlagged) {
  // u=0, v=1, y=2 shared; x=3 only in f; 4 only in e; ux absent.
  // Edge order: 01 02 04 12 13 25. f = {01, 13, 25}; e = {02, 04, 12}.
  const Graph g(6, {{0, 1}, {0, 2}, {0, 4}, {1, 2}, {1, 3}, {2, 5}});
  const auto p = partition_from_labels(g, {1, 0, 0, 0, 1, 1});
  const auto r = check_tinylemma_instances(g, p);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_FALSE(r.all_passed());
  EXPECT_EQ(r.records()[0].witness,
            (nlohmann::json{{"u", 0}, {"v", 1}, {"x", 3}, {"y", 2}}));
}

}  // namespace
}  // namespace qt2ec
