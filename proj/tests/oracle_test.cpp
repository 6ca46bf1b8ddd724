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

#include <map>
#include <set>
#include <string>
#include <vector>

#include "qt2ec/errors.hpp"
#include "qt2ec/families.hpp"
#include "qt2ec/oracle.hpp"

namespace qt2ec {
namespace {

using oracle::SweepConfig;

TEST(BruteForceColouringTest, FrozenValues) {
  EXPECT_EQ(oracle::brute_force_colouring_count(families::path(3)), 2u);
  EXPECT_EQ(oracle::brute_force_colouring_count(families::complete(3)), 8u);
  EXPECT_EQ(oracle::brute_force_colouring_count(families::cycle(5)), 2u);
  EXPECT_EQ(oracle::brute_force_colouring_count(families::cycle(4)), 2u);
  EXPECT_EQ(oracle::brute_force_colouring_count(families::fig1_left()), 16u);
  EXPECT_EQ(oracle::brute_force_colouring_count(families::fig1_right()), 2u);
  EXPECT_EQ(oracle::brute_force_colouring_count(families::k4_minus_e()), 8u);
  EXPECT_EQ(oracle::brute_force_colouring_count(Graph(3)), 1u);
}

TEST(BruteForceOrientationTest, FrozenValues) {
  EXPECT_EQ(oracle::brute_force_orientation_count(families::path(3)), 2u);
  EXPECT_EQ(oracle::brute_force_orientation_count(families::cycle(5)), 0u);
  EXPECT_EQ(oracle::brute_force_orientation_count(families::cycle(4)), 2u);
  // No induced P3, so even the two cyclic orientations count.
  EXPECT_EQ(oracle::brute_force_orientation_count(families::complete(3)), 8u);
  EXPECT_EQ(oracle::brute_force_orientation_count(families::fig1_left()), 16u);
}

TEST(BruteForceTest, RefusesLargeEdgeSets) {
  const Graph k8 = families::complete(8);  // 28 edges
  try {
    oracle::brute_force_colouring_count(k8);
    FAIL() << "expected refusal";
  } catch (const RefusalError& e) {
    EXPECT_EQ(e.quantity(), 28u);
  }
  EXPECT_THROW(oracle::brute_force_orientation_count(k8), RefusalError);
  EXPECT_THROW(oracle::brute_force_minimal_closed_set(k8, 0), RefusalError);
  EXPECT_THROW(oracle::brute_force_witness_subset_count(families::path(8)),
               RefusalError);
}

TEST(BruteForceTest, ValidOrientationMasks) {
  // P3 edges 01, 12: masks 0b10 (0->1, 2->1) and 0b01 (1->0, 1->2).
  EXPECT_EQ(oracle::brute_force_valid_orientations(families::path(3)),
            (std::vector<std::uint64_t>{1, 2}));
}

TEST(MinimalClosedSetTest, Examples) {
  const Graph k4e = families::k4_minus_e();
  const auto s = oracle::brute_force_minimal_closed_set(k4e, 1);
  EXPECT_EQ(s.edges, (std::vector<EdgeIndex>{1, 2}));
  EXPECT_EQ(s.minimum_count, 1u);
  const auto c5 = oracle::brute_force_minimal_closed_set(families::cycle(5), 3);
  EXPECT_EQ(c5.edges.size(), 5u);
  EXPECT_THROW(oracle::brute_force_minimal_closed_set(k4e, 5), ContractError);
}

TEST(WitnessSubsetTest, Examples) {
  EXPECT_EQ(oracle::brute_force_witness_subset_count(families::k4_minus_e()),
            3u);
  EXPECT_EQ(oracle::brute_force_witness_subset_count(
                families::triangle_with_tail(3)),
            1u);
  EXPECT_EQ(oracle::brute_force_witness_subset_count(families::cycle(5)), 0u);
}

TEST(LabeledGraphsTest, Counts) {
  auto count = [](std::size_t n, bool connected) {
    auto stream = oracle::enumerate_labeled_graphs(n, connected);
    std::size_t c = 0;
    while (stream.next()) ++c;
    return c;
  };
  EXPECT_EQ(count(1, false), 1u);
  EXPECT_EQ(count(2, false), 2u);
  EXPECT_EQ(count(2, true), 1u);
  EXPECT_EQ(count(3, true), 4u);
  EXPECT_EQ(count(4, true), 38u);
  EXPECT_EQ(count(5, true), 728u);
  EXPECT_EQ(count(5, false), 1024u);
}

TEST(LabeledGraphsTest, MaskOrder) {
  auto stream = oracle::enumerate_labeled_graphs(3, true);
  std::vector<Graph> seen;
  while (auto g = stream.next()) seen.push_back(*g);
  const std::vector<Graph> expected{Graph(3, {{0, 1}, {0, 2}}),
                                    Graph(3, {{0, 1}, {1, 2}}),
                                    Graph(3, {{0, 2}, {1, 2}}),
                                    families::complete(3)};
  EXPECT_EQ(seen, expected);
  // Bit order is the graph6 column order.
  EXPECT_EQ(oracle::graph_from_mask(4, 0b100000), Graph(4, {{2, 3}}));
}

TEST(LabeledGraphsTest, RangeChecked) {
  EXPECT_THROW(oracle::enumerate_labeled_graphs(0, true), ContractError);
  EXPECT_THROW(oracle::enumerate_labeled_graphs(8, true), ContractError);
}

TEST(SampleTest, SeededAndConnected) {
  const auto a = oracle::sample_connected_graphs(6, 40, 7);
  const auto b = oracle::sample_connected_graphs(6, 40, 7);
  const auto c = oracle::sample_connected_graphs(6, 40, 8);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
  std::set<std::size_t> edge_counts;
  for (const Graph& g : a) {
    EXPECT_EQ(g.num_vertices(), 6u);
    EXPECT_TRUE(is_connected(g));
    edge_counts.insert(g.num_edges());
  }
  EXPECT_GT(edge_counts.size(), 3u);
}

TEST(SweepTest, MaxNFourAllPass) {
  SweepConfig cfg;
  cfg.max_n = 4;
  const auto result = oracle::theorem_sweep(cfg);
  EXPECT_EQ(result.graphs_per_n,
            (std::map<std::size_t, std::size_t>{{1, 1}, {2, 1}, {3, 4}, {4, 38}}));
  EXPECT_EQ(result.graphs(), 44u);
  EXPECT_TRUE(result.report.all_passed()) << result.report.to_jsonl(false);
  // Every check appears at least once.
  const auto tally = result.report.tally();
  for (const std::string& name : oracle::all_checks()) {
    EXPECT_TRUE(tally.count(name)) << name;
  }
}

TEST(SweepTest, MaxNFiveAllPass) {
  SweepConfig cfg;
  cfg.max_n = 5;
  const auto result = oracle::theorem_sweep(cfg);
  EXPECT_EQ(result.graphs_per_n.at(5), 728u);
  EXPECT_EQ(result.report.failures(), 0u);
  const auto tally = result.report.tally();
  EXPECT_EQ(tally.at(oracle::check::kColouringCount).passed, 772u);
}

TEST(SweepTest, IncludesDisconnectedGraphsWhenAsked) {
  SweepConfig cfg;
  cfg.max_n = 4;
  cfg.connected_only = false;
  const auto result = oracle::theorem_sweep(cfg);
  EXPECT_EQ(result.graphs(), 1u + 2u + 8u + 64u);
  EXPECT_TRUE(result.report.all_passed());
}

TEST(SweepTest, DeterministicAcrossThreadCounts) {
  SweepConfig one;
  one.max_n = 5;
  one.threads = 1;
  one.sample_n6 = 20;
  SweepConfig many = one;
  many.threads = 4;
  EXPECT_EQ(oracle::theorem_sweep(one).report.to_jsonl(false),
            oracle::theorem_sweep(many).report.to_jsonl(false));
}

TEST(SweepTest, ChecksFilter) {
  SweepConfig cfg;
  cfg.max_n = 4;
  cfg.checks = {oracle::check::kColouringCount};
  const auto result = oracle::theorem_sweep(cfg);
  EXPECT_EQ(result.report.size(), 44u);
  for (const auto& r : result.report.records()) {
    EXPECT_EQ(r.check, oracle::check::kColouringCount);
  }
}

TEST(SweepTest, RecordsAreSortedAndKeyed) {
  SweepConfig cfg;
  cfg.max_n = 3;
  const auto result = oracle::theorem_sweep(cfg);
  const auto& recs = result.report.records();
  for (std::size_t i = 1; i < recs.size(); ++i) {
    EXPECT_LE(recs[i - 1].graph6, recs[i].graph6);
  }
  for (const auto& r : recs) {
    EXPECT_NO_THROW(parse_graph6(r.graph6));
    EXPECT_EQ(r.to_json()["schema"], kReportSchema);
  }
}

TEST(SweepTest, BadConfig) {
  SweepConfig cfg;
  cfg.max_n = 8;
  EXPECT_THROW(oracle::theorem_sweep(cfg), ContractError);
  cfg.max_n = 3;
  cfg.checks = {"no_such_check"};
  EXPECT_THROW(oracle::theorem_sweep(cfg), ContractError);
}

// Mutation harness: a broken partition must be caught with witnesses.
TEST(SweepMutationTest, MergedClassesAreCaught) {
  SweepConfig cfg;
  cfg.max_n = 4;
  cfg.partition = [](const Graph& g) {
    return partition_from_labels(g, std::vector<std::uint32_t>(g.num_edges(), 0));
  };
  const auto result = oracle::theorem_sweep(cfg);
  ASSERT_FALSE(result.report.all_passed());
  bool count_failed = false;
  for (const auto& r : result.report.records()) {
    if (r.passed) continue;
    EXPECT_FALSE(r.witness.is_null()) << r.check;
    EXPECT_NO_THROW(parse_graph6(r.graph6));
    if (r.check == oracle::check::kColouringCount) count_failed = true;
  }
  EXPECT_TRUE(count_failed);
}

TEST(SweepMutationTest, SplitClassesAreCaught) {
  SweepConfig cfg;
  cfg.max_n = 4;
  cfg.checks = {oracle::check::kColouringCount, oracle::check::kPartitionLaws,
                oracle::check::kClassMinimality};
  cfg.partition = [](const Graph& g) {
    std::vector<std::uint32_t> labels(g.num_edges());
    for (std::uint32_t i = 0; i < labels.size(); ++i) labels[i] = i;
    return partition_from_labels(g, labels);
  };
  const auto tally = oracle::theorem_sweep(cfg).report.tally();
  EXPECT_GT(tally.at(oracle::check::kColouringCount).failed, 0u);
  EXPECT_GT(tally.at(oracle::check::kPartitionLaws).failed, 0u);
  EXPECT_GT(tally.at(oracle::check::kClassMinimality).failed, 0u);
}

TEST(CheckGraphTest, SingleGraph) {
  const auto report = oracle::check_graph(families::fig1_left());
  EXPECT_TRUE(report.all_passed()) << report.to_jsonl(false);
  const CheckRecord* count = report.find(oracle::check::kColouringCount);
  ASSERT_NE(count, nullptr);
  EXPECT_EQ(count->note, "k=4");
}

}  // namespace
}  // namespace qt2ec
