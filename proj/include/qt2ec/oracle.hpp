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

#ifndef QT2EC_ORACLE_HPP_
#define QT2EC_ORACLE_HPP_

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "qt2ec/colouring.hpp"
#include "qt2ec/edge_classes.hpp"
#include "qt2ec/errors.hpp"
#include "qt2ec/graph.hpp"
#include "qt2ec/graph_io.hpp"
#include "qt2ec/orientation.hpp"
#include "qt2ec/report.hpp"
#include "qt2ec/structure.hpp"

namespace qt2ec::oracle {

// Everything in this namespace above theorem_sweep works from the
// definitions only and never consults the class partition.

inline constexpr std::size_t kMaxBruteForceEdges = 22;
inline constexpr std::size_t kMaxCorpusVertices = 7;

namespace detail {

struct LocalAdjacency {
  std::vector<std::uint64_t> adj;
};

inline LocalAdjacency local_adjacency(const Graph& g) {
  if (g.num_vertices() > 64) {
    throw RefusalError("brute force limited to 64 vertices", g.num_vertices());
  }
  LocalAdjacency out{std::vector<std::uint64_t>(g.num_vertices(), 0)};
  for (const Edge& e : g.edges()) {
    out.adj[e.u] |= std::uint64_t{1} << e.v;
    out.adj[e.v] |= std::uint64_t{1} << e.u;
  }
  return out;
}

inline void require_small(const Graph& g) {
  if (g.num_edges() > kMaxBruteForceEdges) {
    throw RefusalError("brute force refused: m=" +
                           std::to_string(g.num_edges()) + " exceeds " +
                           std::to_string(kMaxBruteForceEdges),
                       g.num_edges());
  }
}

// A 2-path x-y-z whose ends are non-adjacent is the only configuration the
// definitions constrain.
inline bool has_open_two_path(const LocalAdjacency& la, Vertex y,
                              std::uint64_t first, std::uint64_t second) {
  while (first != 0) {
    const int x = std::countr_zero(first);
    first &= first - 1;
    const std::uint64_t open =
        second & ~la.adj[x] & ~(std::uint64_t{1} << x);
    if (open != 0) return true;
  }
  (void)y;
  return false;
}

}  // namespace detail

// Counts maps c: E -> {R, B} such that c(xy) != c(yz) implies xz in E, by
// trying all 2^m maps.
inline std::uint64_t brute_force_colouring_count(const Graph& g) {
  detail::require_small(g);
  const auto la = detail::local_adjacency(g);
  const std::size_t n = g.num_vertices();
  const std::size_t m = g.num_edges();
  std::uint64_t count = 0;
  std::vector<std::uint64_t> red(n), blue(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::fill(red.begin(), red.end(), 0);
    std::fill(blue.begin(), blue.end(), 0);
    for (std::size_t i = 0; i < m; ++i) {
      const Edge& e = g.edge(static_cast<EdgeIndex>(i));
      auto& side = ((mask >> i) & 1u) ? blue : red;
      side[e.u] |= std::uint64_t{1} << e.v;
      side[e.v] |= std::uint64_t{1} << e.u;
    }
    bool ok = true;
    for (Vertex y = 0; y < n && ok; ++y) {
      ok = !detail::has_open_two_path(la, y, red[y], blue[y]);
    }
    if (ok) ++count;
  }
  return count;
}

// Counts orientations of all m edges with no induced directed 2-path.
inline std::uint64_t brute_force_orientation_count(const Graph& g) {
  detail::require_small(g);
  const auto la = detail::local_adjacency(g);
  const std::size_t n = g.num_vertices();
  const std::size_t m = g.num_edges();
  std::uint64_t count = 0;
  std::vector<std::uint64_t> in(n), out(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::fill(in.begin(), in.end(), 0);
    std::fill(out.begin(), out.end(), 0);
    for (std::size_t i = 0; i < m; ++i) {
      const Edge& e = g.edge(static_cast<EdgeIndex>(i));
      const Vertex tail = ((mask >> i) & 1u) ? e.v : e.u;
      const Vertex head = ((mask >> i) & 1u) ? e.u : e.v;
      out[tail] |= std::uint64_t{1} << head;
      in[head] |= std::uint64_t{1} << tail;
    }
    bool ok = true;
    for (Vertex y = 0; y < n && ok; ++y) {
      ok = !detail::has_open_two_path(la, y, in[y], out[y]);
    }
    if (ok) ++count;
  }
  return count;
}

// Valid full orientations as edge-direction bitmasks (bit set = reversed).
inline std::vector<std::uint64_t> brute_force_valid_orientations(
    const Graph& g) {
  detail::require_small(g);
  const auto la = detail::local_adjacency(g);
  const std::size_t n = g.num_vertices();
  const std::size_t m = g.num_edges();
  std::vector<std::uint64_t> valid;
  std::vector<std::uint64_t> in(n), out(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::fill(in.begin(), in.end(), 0);
    std::fill(out.begin(), out.end(), 0);
    for (std::size_t i = 0; i < m; ++i) {
      const Edge& e = g.edge(static_cast<EdgeIndex>(i));
      const Vertex tail = ((mask >> i) & 1u) ? e.v : e.u;
      const Vertex head = ((mask >> i) & 1u) ? e.u : e.v;
      out[tail] |= std::uint64_t{1} << head;
      in[head] |= std::uint64_t{1} << tail;
    }
    bool ok = true;
    for (Vertex y = 0; y < n && ok; ++y) {
      ok = !detail::has_open_two_path(la, y, in[y], out[y]);
    }
    if (ok) valid.push_back(mask);
  }
  return valid;
}

// Whether a single colouring (bit set = blue) satisfies the definition.
inline bool brute_force_colouring_valid(const Graph& g, std::uint64_t mask) {
  const auto la = detail::local_adjacency(g);
  std::vector<std::uint64_t> red(g.num_vertices()), blue(g.num_vertices());
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edge(static_cast<EdgeIndex>(i));
    auto& side = ((mask >> i) & 1u) ? blue : red;
    side[e.u] |= std::uint64_t{1} << e.v;
    side[e.v] |= std::uint64_t{1} << e.u;
  }
  for (Vertex y = 0; y < g.num_vertices(); ++y) {
    if (detail::has_open_two_path(la, y, red[y], blue[y])) return false;
  }
  return true;
}

inline constexpr std::size_t kMaxMinimalSetEdges = 12;

struct MinimalClosedSet {
  std::vector<EdgeIndex> edges;
  std::size_t minimum_count = 0;  // how many closed sets attain the minimum
};

// The smallest edge set containing e such that no induced P3 has exactly one
// edge inside, found by trying every subset that contains e.
inline MinimalClosedSet brute_force_minimal_closed_set(const Graph& g,
                                                       EdgeIndex e) {
  const std::size_t m = g.num_edges();
  if (m > kMaxMinimalSetEdges) {
    throw RefusalError("minimal-set search refused: m too large", m);
  }
  if (e >= m) throw ContractError("unknown edge index");
  const auto la = detail::local_adjacency(g);
  // Pairs of edges forming an induced P3, found from adjacency directly.
  std::vector<std::pair<std::size_t, std::size_t>> linked;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      const Edge& ea = g.edge(static_cast<EdgeIndex>(a));
      const Edge& eb = g.edge(static_cast<EdgeIndex>(b));
      Vertex shared = 0, x = 0, z = 0;
      if (ea.u == eb.u) {
        shared = ea.u, x = ea.v, z = eb.v;
      } else if (ea.u == eb.v) {
        shared = ea.u, x = ea.v, z = eb.u;
      } else if (ea.v == eb.u) {
        shared = ea.v, x = ea.u, z = eb.v;
      } else if (ea.v == eb.v) {
        shared = ea.v, x = ea.u, z = eb.u;
      } else {
        continue;
      }
      (void)shared;
      if (((la.adj[x] >> z) & 1u) == 0) linked.emplace_back(a, b);
    }
  }
  MinimalClosedSet best;
  std::size_t best_size = m + 1;
  std::uint64_t best_mask = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    if (((mask >> e) & 1u) == 0) continue;
    bool closed = true;
    for (auto [a, b] : linked) {
      if (((mask >> a) & 1u) != ((mask >> b) & 1u)) {
        closed = false;
        break;
      }
    }
    if (!closed) continue;
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size < best_size) {
      best_size = size;
      best_mask = mask;
      best.minimum_count = 1;
    } else if (size == best_size) {
      ++best.minimum_count;
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    if ((best_mask >> i) & 1u) best.edges.push_back(static_cast<EdgeIndex>(i));
  }
  return best;
}

// Number of vertex subsets H satisfying the three witness conditions,
// tried exhaustively.
inline std::size_t brute_force_witness_subset_count(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n > kMaxCorpusVertices) {
    throw RefusalError("subset search limited to 7 vertices", n);
  }
  std::size_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    VertexBitset h(n, mask);
    if (is_homogeneous_witness(g, h)) ++count;
  }
  return count;
}

// Graph whose upper-triangle pairs (column order, as in graph6) are the set
// bits of mask.
inline Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      if ((mask >> bit) & 1u) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

// All 2^C(n,2) labeled graphs on n vertices in mask order, optionally only the
// connected ones.
class LabeledGraphs {
 public:
  LabeledGraphs(std::size_t n, bool connected_only)
      : n_(n), connected_only_(connected_only) {
    if (n < 1 || n > kMaxCorpusVertices) {
      throw ContractError("enumerate_labeled_graphs: n must be in 1..7");
    }
    end_ = std::uint64_t{1} << (n * (n - 1) / 2);
  }

  std::optional<Graph> next() {
    while (mask_ < end_) {
      Graph g = graph_from_mask(n_, mask_++);
      if (!connected_only_ || is_connected(g)) return g;
    }
    return std::nullopt;
  }

  std::uint64_t mask_count() const noexcept { return end_; }

 private:
  std::size_t n_;
  bool connected_only_;
  std::uint64_t mask_ = 0;
  std::uint64_t end_ = 0;
};

inline LabeledGraphs enumerate_labeled_graphs(std::size_t n,
                                              bool connected_only) {
  return LabeledGraphs(n, connected_only);
}

// Connected random graphs: each draw picks an edge density in [0.2, 0.8] and
// rejects disconnected results.
inline std::vector<Graph> sample_connected_graphs(std::size_t n,
                                                  std::size_t count,
                                                  std::uint64_t seed) {
  if (n < 1 || n > kMaxCorpusVertices) {
    throw ContractError("sample_connected_graphs: n must be in 1..7");
  }
  std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ull * n));
  std::uniform_real_distribution<double> density(0.2, 0.8);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  const std::size_t pairs = n * (n - 1) / 2;
  std::vector<Graph> out;
  while (out.size() < count) {
    const double p = density(rng);
    std::uint64_t mask = 0;
    for (std::size_t b = 0; b < pairs; ++b) {
      if (coin(rng) < p) mask |= std::uint64_t{1} << b;
    }
    Graph g = graph_from_mask(n, mask);
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Theorem sweep.

namespace check {
inline constexpr const char* kColouringCount = "colouring_count";
inline constexpr const char* kOrientationCount = "orientation_count";
inline constexpr const char* kPartitionLaws = "partition_laws";
inline constexpr const char* kClassMinimality = "class_minimality";
inline constexpr const char* kColouringConstancy = "colouring_constancy";
inline constexpr const char* kEnumeration = "enumeration";
inline constexpr const char* kClassSingleClass = "class_single_class";
inline constexpr const char* kShortestPath = "shortest_path_single_class";
inline constexpr const char* kPendantBound = "pendant_class_bound";
inline constexpr const char* kHomogeneity = "class_homogeneity";
inline constexpr const char* kModuleContainment = "module_containment";
inline constexpr const char* kTwoClassNesting = "two_class_nesting";
inline constexpr const char* kThreeClass = "three_class_classification";
inline constexpr const char* kCrossingLemmas = "crossing_lemmas";
inline constexpr const char* kTinyLemma = "tiny_lemma";
inline constexpr const char* kWitness = "hf1f2_witness";
inline constexpr const char* kUniqueWitness = "unique_hf1f2";
inline constexpr const char* kFinalEquivalence = "final_equivalence";
inline constexpr const char* kGammaReversal = "gamma_reversal";
inline constexpr const char* kRestriction = "restriction_coherence";
}  // namespace check

inline std::vector<std::string> all_checks() {
  return {check::kColouringCount,    check::kOrientationCount,
          check::kPartitionLaws,     check::kClassMinimality,
          check::kColouringConstancy, check::kEnumeration,
          check::kClassSingleClass,  check::kShortestPath,
          check::kPendantBound,      check::kHomogeneity,
          check::kModuleContainment, check::kTwoClassNesting,
          check::kThreeClass,        check::kCrossingLemmas,
          check::kTinyLemma,         check::kWitness,
          check::kUniqueWitness,     check::kFinalEquivalence,
          check::kGammaReversal,     check::kRestriction};
}

using PartitionFn = std::function<EdgeClassPartition(const Graph&)>;

struct SweepConfig {
  std::size_t min_n = 1;
  std::size_t max_n = 5;
  bool connected_only = true;
  std::set<std::string> checks;  // empty means all
  std::size_t sample_n6 = 0;
  std::size_t sample_n7 = 0;
  std::uint64_t seed = 1;
  std::size_t threads = 0;  // 0: QT2EC_THREADS or hardware concurrency
  // Replaces compute_classes for the class-based side of every check; used
  // for mutation testing of the harness.
  PartitionFn partition;
};

struct SweepResult {
  VerificationReport report;
  std::map<std::size_t, std::size_t> graphs_per_n;
  std::uint64_t seed = 0;

  std::size_t graphs() const {
    std::size_t total = 0;
    for (auto [n, c] : graphs_per_n) total += c;
    return total;
  }
};

namespace detail {

inline constexpr const char* kPendantInterpretation =
    "a class is pendant when some vertex of V(S) is in no other class's "
    "vertex set";

class GraphChecker {
 public:
  GraphChecker(const Graph& g, const SweepConfig& cfg)
      : g_(g),
        cfg_(cfg),
        key_(encode_graph6(g)),
        p_(cfg.partition ? cfg.partition(g) : compute_classes(g)),
        connected_(is_connected(g)) {}

  VerificationReport run() {
    auto wanted = [&](const char* name) {
      return cfg_.checks.empty() || cfg_.checks.count(name) != 0;
    };
    timed(wanted(check::kColouringCount), [&] { colouring_count(); });
    timed(wanted(check::kOrientationCount), [&] { orientation_count(); });
    timed(wanted(check::kPartitionLaws), [&] { partition_laws(); });
    timed(wanted(check::kClassMinimality), [&] { class_minimality(); });
    timed(wanted(check::kColouringConstancy), [&] { colouring_constancy(); });
    timed(wanted(check::kEnumeration), [&] { enumeration(); });
    timed(wanted(check::kClassSingleClass), [&] { class_single_class(); });
    timed(wanted(check::kHomogeneity), [&] { class_homogeneity(); });
    timed(wanted(check::kGammaReversal), [&] { gamma_reversal(); });
    timed(wanted(check::kRestriction), [&] { restriction_coherence(); });
    timed(wanted(check::kTinyLemma), [&] { tiny_lemma(); });
    if (connected_) {
      timed(wanted(check::kShortestPath), [&] { shortest_paths(); });
      timed(wanted(check::kPendantBound), [&] { pendant_bound(); });
      timed(wanted(check::kModuleContainment), [&] { module_containment(); });
      timed(wanted(check::kTwoClassNesting), [&] { two_class_nesting(); });
      timed(wanted(check::kThreeClass), [&] { three_class(); });
      timed(wanted(check::kCrossingLemmas), [&] { crossing_lemmas(); });
      timed(wanted(check::kWitness), [&] { witness(); });
      timed(wanted(check::kUniqueWitness), [&] { unique_witness(); });
      timed(wanted(check::kFinalEquivalence), [&] { final_equivalence(); });
    }
    return std::move(report_);
  }

 private:
  template <typename Fn>
  void timed(bool enabled, Fn&& fn) {
    if (!enabled) return;
    const std::size_t before = report_.size();
    const auto start = std::chrono::steady_clock::now();
    fn();
    const auto micros = std::chrono::duration_cast<std::chrono::microseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    report_.stamp(before, micros);
  }

  void record(const char* name, const nlohmann::json& witness,
              std::string note = {}) {
    if (witness.is_null()) {
      report_.pass(name, key_, std::move(note));
    } else {
      report_.fail(name, key_, witness, std::move(note));
    }
  }

  bool partition_sane() const {
    try {
      check_partition_shape(g_, p_);
      return true;
    } catch (const ContractError&) {
      return false;
    }
  }

  void colouring_count() {
    if (g_.num_edges() > kMaxBruteForceEdges) return;
    const std::uint64_t brute = brute_force_colouring_count(g_);
    const BigInt formula = pow2(p_.size());
    nlohmann::json witness;
    if (BigInt(brute) != formula) {
      witness = {{"brute_force", brute}, {"k", p_.size()}};
    }
    record(check::kColouringCount, witness, "k=" + std::to_string(p_.size()));
  }

  void orientation_count() {
    if (g_.num_edges() > kMaxBruteForceEdges) return;
    const std::uint64_t brute = brute_force_orientation_count(g_);
    const OrientationFeasibility feas = orientability(g_);
    nlohmann::json witness;
    if (BigInt(brute) != feas.count) {
      witness = {{"brute_force", brute},
                 {"formula", feas.count.str()},
                 {"k", feas.k()}};
    }
    record(check::kOrientationCount, witness,
           "count=" + std::to_string(brute));
  }

  void partition_laws() {
    if (!partition_sane()) {
      record(check::kPartitionLaws, {{"error", "malformed partition"}});
      return;
    }
    const VerificationReport laws = verify_partition_laws(g_, p_);
    for (const CheckRecord& r : laws.records()) {
      record(check::kPartitionLaws, r.passed ? nlohmann::json() : nlohmann::json{
          {"law", r.check}, {"detail", r.witness}}, r.check);
    }
  }

  void class_minimality() {
    if (g_.num_edges() > kMaxMinimalSetEdges) return;
    nlohmann::json witness;
    for (EdgeIndex e = 0; e < g_.num_edges() && witness.is_null(); ++e) {
      const MinimalClosedSet brute = brute_force_minimal_closed_set(g_, e);
      const auto& mine = p_.classes.at(p_.class_of.at(e));
      if (brute.edges != mine || brute.minimum_count != 1) {
        witness = {{"edge", e},
                   {"brute_force", brute.edges},
                   {"class", mine},
                   {"minimum_count", brute.minimum_count}};
      }
    }
    record(check::kClassMinimality, witness);
  }

  // A colouring is valid exactly when it is constant on every class.
  void colouring_constancy() {
    constexpr std::size_t kMaxEdges = 14;
    if (g_.num_edges() > kMaxEdges) return;
    nlohmann::json witness;
    for (std::uint64_t mask = 0;
         mask < (std::uint64_t{1} << g_.num_edges()) && witness.is_null();
         ++mask) {
      bool constant = true;
      for (const auto& cls : p_.classes) {
        for (EdgeIndex e : cls) {
          if (((mask >> e) & 1u) != ((mask >> cls.front()) & 1u)) {
            constant = false;
          }
        }
      }
      if (constant != brute_force_colouring_valid(g_, mask)) {
        witness = {{"colouring_mask", mask}, {"constant_on_classes", constant}};
      }
    }
    record(check::kColouringConstancy, witness);
  }

  void enumeration() {
    constexpr std::size_t kMaxClasses = 12;
    if (compute_classes(g_).size() > kMaxClasses) return;
    nlohmann::json witness;
    const auto colourings = enumerate_colourings(g_);
    std::set<std::vector<Colour>> seen;
    std::uint64_t produced = 0;
    for (const EdgeColouring& c : colourings) {
      ++produced;
      const EdgeColouring swapped = c.swapped();
      if (!is_quasi_transitive_colouring(g_, c).valid ||
          !is_quasi_transitive_colouring(g_, swapped).valid ||
          !seen.insert(c.colour).second) {
        if (witness.is_null()) witness = {{"colouring_index", produced - 1}};
      }
    }
    if (produced != (std::uint64_t{1} << compute_classes(g_).size()) &&
        witness.is_null()) {
      witness = {{"stream_length", produced}};
    }
    if (orientability(g_).orientable) {
      std::uint64_t index = 0;
      std::set<std::vector<Direction>> distinct;
      for (const Orientation& o : enumerate_orientations(g_)) {
        if ((!is_quasi_transitive_orientation(g_, o).valid ||
             !distinct.insert(o.dir).second) &&
            witness.is_null()) {
          witness = {{"orientation_index", index}};
        }
        ++index;
      }
    }
    record(check::kEnumeration, witness);
  }

  void class_single_class() {
    nlohmann::json witness;
    for (ClassId c = 0; c < p_.size() && witness.is_null(); ++c) {
      const auto sub = class_subgraph(g_, p_.classes[c]);
      const std::size_t k = compute_classes(sub.graph).size();
      if (k != 1) witness = {{"class", c}, {"subgraph_classes", k}};
    }
    record(check::kClassSingleClass, witness);
  }

  void class_homogeneity() {
    nlohmann::json witness;
    for (ClassId c = 0; c < p_.size() && witness.is_null(); ++c) {
      const auto& vs = p_.vertex_sets[c];
      if (vs.size() != g_.num_vertices() && !is_module_set(g_, vs)) {
        witness = {{"class", c}, {"vertices", vs}};
      }
    }
    record(check::kHomogeneity, witness);
  }

  void gamma_reversal() {
    const OrientationFeasibility feas = orientability(g_);
    nlohmann::json witness;
    std::size_t seeds = 0;
    for (EdgeIndex e = 0; e < g_.num_edges() && witness.is_null(); ++e) {
      if (!feas.classes[feas.partition.class_of[e]].consistent) continue;
      ++seeds;
      const Edge& ed = g_.edge(e);
      const Orientation fwd = partial_orientation(g_, Arc{ed.u, ed.v});
      const Orientation back = partial_orientation(g_, Arc{ed.v, ed.u});
      const auto& cls = p_.classes.at(p_.class_of.at(e));
      if (fwd.domain() != cls || back.domain() != cls ||
          fwd.reversed() != back) {
        witness = {{"edge", {ed.u, ed.v}},
                   {"domain", fwd.domain()},
                   {"class", cls}};
      }
    }
    record(check::kGammaReversal, witness,
           "seeds=" + std::to_string(seeds));
  }

  void restriction_coherence() {
    constexpr std::size_t kMaxEdges = 12;
    if (g_.num_edges() > kMaxEdges) return;
    nlohmann::json witness;
    const auto valid = brute_force_valid_orientations(g_);
    for (std::uint64_t mask : valid) {
      Orientation o = Orientation::unset(g_.num_edges());
      for (EdgeIndex e = 0; e < g_.num_edges(); ++e) {
        o.dir[e] = ((mask >> e) & 1u) ? Direction::kReverse
                                      : Direction::kForward;
      }
      for (EdgeIndex e = 0; e < g_.num_edges() && witness.is_null(); ++e) {
        const Orientation gamma =
            partial_orientation(g_, arc_of(g_.edge(e), o.dir[e]));
        if (o.restricted(gamma.domain()) != gamma) {
          witness = {{"orientation_mask", mask}, {"seed_edge", e}};
        }
      }
      if (!witness.is_null()) break;
    }
    record(check::kRestriction, witness,
           "orientations=" + std::to_string(valid.size()));
  }

  void tiny_lemma() {
    if (!partition_sane()) return;
    const VerificationReport tiny = check_tinylemma_instances(g_, p_);
    for (const CheckRecord& r : tiny.records()) {
      record(check::kTinyLemma, r.witness, r.note);
    }
  }

  void shortest_paths() {
    const std::size_t n = g_.num_vertices();
    nlohmann::json witness;
    std::vector<Vertex> path;
    for (Vertex x = 0; x < n && witness.is_null(); ++x) {
      std::vector<int> dist(n, -1);
      std::vector<Vertex> queue{x};
      dist[x] = 0;
      for (std::size_t q = 0; q < queue.size(); ++q) {
        for (Vertex w : g_.neighbours(queue[q])) {
          if (dist[w] < 0) {
            dist[w] = dist[queue[q]] + 1;
            queue.push_back(w);
          }
        }
      }
      // Walk every shortest path back from y to x.
      std::function<void(Vertex)> walk = [&](Vertex at) {
        if (!witness.is_null()) return;
        if (at == x) {
          std::optional<ClassId> cls;
          for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            const ClassId c = p_.class_of[g_.edge_index(path[i], path[i + 1])];
            if (cls && *cls != c) {
              witness = {{"path", path}};
              return;
            }
            cls = c;
          }
          return;
        }
        for (Vertex w : g_.neighbours(at)) {
          if (dist[w] == dist[at] - 1) {
            path.push_back(w);
            walk(w);
            path.pop_back();
          }
        }
      };
      for (Vertex y = x + 1; y < n && witness.is_null(); ++y) {
        path.assign(1, y);
        walk(y);
      }
    }
    record(check::kShortestPath, witness);
  }

  void pendant_bound() {
    std::vector<std::size_t> membership(g_.num_vertices(), 0);
    for (const auto& vs : p_.vertex_sets) {
      for (Vertex v : vs) ++membership[v];
    }
    std::vector<ClassId> pendant;
    for (ClassId c = 0; c < p_.size(); ++c) {
      for (Vertex v : p_.vertex_sets[c]) {
        if (membership[v] == 1) {
          pendant.push_back(c);
          break;
        }
      }
    }
    nlohmann::json witness;
    if (pendant.size() > 1) witness = {{"pendant_classes", pendant}};
    record(check::kPendantBound, witness, kPendantInterpretation);
  }

  // Every connected proper induced subgraph H with an edge whose vertex set
  // is a module contains the whole class of each of its edges.
  void module_containment() {
    const std::size_t n = g_.num_vertices();
    if (n > kMaxCorpusVertices) return;
    nlohmann::json witness;
    std::size_t modules = 0;
    for (std::uint64_t mask = 0;
         mask + 1 < (std::uint64_t{1} << n) && witness.is_null(); ++mask) {
      VertexBitset h(n, mask);
      if (h.count() < 2 || !is_homogeneous_witness(g_, h)) continue;
      ++modules;
      for (EdgeIndex e = 0; e < g_.num_edges(); ++e) {
        const Edge& ed = g_.edge(e);
        if (!h.test(ed.u) || !h.test(ed.v)) continue;
        for (EdgeIndex f : p_.classes[p_.class_of[e]]) {
          if (!h.test(g_.edge(f).u) || !h.test(g_.edge(f).v)) {
            witness = {{"module", to_vertices(h)}, {"edge", e}, {"escapes", f}};
            break;
          }
        }
        if (!witness.is_null()) break;
      }
    }
    record(check::kModuleContainment, witness,
           "modules=" + std::to_string(modules));
  }

  void two_class_nesting() {
    if (p_.size() != 2) return;
    const ClassPairRelation rel = class_pair_relation(p_, 0, 1);
    nlohmann::json witness;
    if (rel.tag != PairTag::kNested) witness = {{"tag", to_string(rel.tag)}};
    record(check::kTwoClassNesting, witness);
  }

  void three_class() {
    if (p_.size() != 3 || !partition_sane()) return;
    const ThreeClassOutcome out = three_class_classification(g_, p_);
    nlohmann::json witness;
    if (!out.classified()) witness = {{"classes", p_.classes}};
    std::string note;
    if (out.complete_tripartite()) note = "complete_tripartite";
    if (out.spanning_class) {
      note += (note.empty() ? "" : ";") +
              std::string("spanning_class=") +
              std::to_string(*out.spanning_class);
    }
    record(check::kThreeClass, witness, note);
  }

  void crossing_lemmas() {
    if (!partition_sane()) return;
    std::size_t pairs = 0;
    std::map<std::string, nlohmann::json> failures;
    std::set<std::string> names;
    for (ClassId c = 0; c < p_.size(); ++c) {
      for (ClassId d = c + 1; d < p_.size(); ++d) {
        if (class_pair_relation(p_, c, d).tag != PairTag::kCrossing) continue;
        ++pairs;
        const VerificationReport lemmas = check_crossing_lemmas(g_, p_, c, d);
        for (const CheckRecord& r : lemmas.records()) {
          names.insert(r.check);
          if (!r.passed && !failures.count(r.check)) {
            failures[r.check] = {{"classes", {c, d}}, {"detail", r.witness}};
          }
        }
      }
    }
    if (pairs == 0) return;
    const std::string note = "k=" + std::to_string(p_.size()) +
                             ";crossing_pairs=" + std::to_string(pairs);
    for (const std::string& name : names) {
      auto it = failures.find(name);
      record(check::kCrossingLemmas,
             it == failures.end() ? nlohmann::json()
                                  : nlohmann::json{{"lemma", name},
                                                   {"detail", it->second}},
             name + ";" + note);
    }
  }

  void witness() {
    if (g_.num_edges() == 0) return;
    const auto found_all = homogeneous_witness_classes(g_, p_);
    std::optional<std::vector<Vertex>> found;
    if (!found_all.empty()) found = found_all.front();
    const bool properly = p_.size() >= 2;
    nlohmann::json witness;
    if (found.has_value() != properly) {
      witness = {{"properly_colourable", properly},
                 {"witness_found", found.has_value()}};
    } else if (found && !is_homogeneous_witness(g_, *found)) {
      witness = {{"invalid_witness", *found}};
    }
    record(check::kWitness, witness);
  }

  void unique_witness() {
    if (g_.num_vertices() > kMaxCorpusVertices || g_.num_edges() == 0) return;
    const std::size_t by_class = homogeneous_witness_classes(g_, p_).size();
    const std::size_t by_subset = brute_force_witness_subset_count(g_);
    const bool uniquely = p_.size() == 2;
    nlohmann::json witness;
    if ((by_class == 1) != (by_subset == 1) || (by_class == 1) != uniquely) {
      witness = {{"class_count", by_class},
                 {"subset_count", by_subset},
                 {"uniquely_colourable", uniquely}};
    }
    record(check::kUniqueWitness, witness,
           "class_count=" + std::to_string(by_class) +
               ";subset_count=" + std::to_string(by_subset));
  }

  void final_equivalence() {
    if (g_.num_edges() == 0 || g_.num_edges() > kMaxBruteForceEdges) return;
    const std::uint64_t orientations = brute_force_orientation_count(g_);
    if (orientations == 0) return;  // not a comparability graph
    const bool trivial = p_.size() == 1;
    nlohmann::json witness;
    if ((orientations == 2) != trivial) {
      witness = {{"orientations", orientations}, {"trivial_only", trivial}};
    }
    record(check::kFinalEquivalence, witness);
  }

  const Graph& g_;
  const SweepConfig& cfg_;
  std::string key_;
  EdgeClassPartition p_;
  bool connected_;
  VerificationReport report_;
};

inline std::size_t sweep_threads(const SweepConfig& cfg) {
  if (cfg.threads != 0) return cfg.threads;
  if (const char* env = std::getenv("QT2EC_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace detail

// Runs the named checks on one graph.
inline VerificationReport check_graph(const Graph& g,
                                      const SweepConfig& cfg = {}) {
  return detail::GraphChecker(g, cfg).run();
}

// Exhaustive corpus for min_n..max_n plus optional seeded samples at n = 6
// and n = 7. Records are sorted by (graph6, check), so the result is
// independent of thread count.
inline SweepResult theorem_sweep(const SweepConfig& cfg) {
  if (cfg.max_n > kMaxCorpusVertices) {
    throw ContractError("theorem_sweep: max_n is capped at 7");
  }
  for (const auto& name : cfg.checks) {
    const auto known = all_checks();
    if (std::find(known.begin(), known.end(), name) == known.end()) {
      throw ContractError("unknown check '" + name + "'");
    }
  }
  SweepResult result;
  result.seed = cfg.seed;

  std::vector<Graph> extra;
  if (cfg.sample_n6 > 0) {
    auto s = sample_connected_graphs(6, cfg.sample_n6, cfg.seed);
    result.graphs_per_n[6] += s.size();
    extra.insert(extra.end(), s.begin(), s.end());
  }
  if (cfg.sample_n7 > 0) {
    auto s = sample_connected_graphs(7, cfg.sample_n7, cfg.seed + 1);
    result.graphs_per_n[7] += s.size();
    extra.insert(extra.end(), s.begin(), s.end());
  }

  // Work items: (n, mask) for the exhaustive part, then the samples.
  struct Item {
    std::size_t n;
    std::uint64_t mask;
  };
  std::vector<Item> items;
  for (std::size_t n = std::max<std::size_t>(cfg.min_n, 1); n <= cfg.max_n;
       ++n) {
    const std::uint64_t masks = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
      items.push_back({n, mask});
    }
  }

  const std::size_t threads = detail::sweep_threads(cfg);
  std::vector<VerificationReport> reports(threads);
  std::vector<std::map<std::size_t, std::size_t>> counts(threads);
  auto worker = [&](std::size_t t) {
    for (std::size_t i = t; i < items.size(); i += threads) {
      Graph g = graph_from_mask(items[i].n, items[i].mask);
      if (cfg.connected_only && !is_connected(g)) continue;
      ++counts[t][items[i].n];
      reports[t].merge(check_graph(g, cfg));
    }
    for (std::size_t i = t; i < extra.size(); i += threads) {
      reports[t].merge(check_graph(extra[i], cfg));
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker, t);
  worker(0);
  for (auto& th : pool) th.join();

  for (std::size_t t = 0; t < threads; ++t) {
    result.report.merge(std::move(reports[t]));
    for (auto [n, c] : counts[t]) result.graphs_per_n[n] += c;
  }
  result.report.sort();
  return result;
}

}  // namespace qt2ec::oracle

#endif  // QT2EC_ORACLE_HPP_
