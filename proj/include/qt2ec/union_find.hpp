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

#ifndef QT2EC_UNION_FIND_HPP_
#define QT2EC_UNION_FIND_HPP_

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace qt2ec {

// Disjoint-set forest with union by size and path halving.
template <typename Index = std::uint32_t>
class UnionFind {
 public:
  explicit UnionFind(std::size_t n = 0) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), Index{0});
  }

  std::size_t size() const noexcept { return parent_.size(); }

  Index find(Index x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Returns true when two distinct sets were merged.
  bool unite(Index a, Index b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

  bool same(Index a, Index b) { return find(a) == find(b); }

 private:
  std::vector<Index> parent_;
  std::vector<std::size_t> size_;
};

// Union-find where every element carries a parity bit relative to its root.
// unite(a, b, p) records x_a XOR x_b == p and reports a contradiction when
// the two elements are already related with the opposite parity.
template <typename Index = std::uint32_t>
class ParityUnionFind {
 public:
  explicit ParityUnionFind(std::size_t n = 0)
      : parent_(n), size_(n, 1), parity_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), Index{0});
  }

  std::size_t size() const noexcept { return parent_.size(); }

  // Root of x and the parity of x relative to that root.
  std::pair<Index, std::uint8_t> find(Index x) {
    std::uint8_t acc = 0;
    Index root = x;
    while (parent_[root] != root) {
      acc ^= parity_[root];
      root = parent_[root];
    }
    // Compress: point every node on the path straight at the root.
    std::uint8_t remaining = acc;
    while (parent_[x] != x) {
      const Index next = parent_[x];
      const std::uint8_t own = parity_[x];
      parent_[x] = root;
      parity_[x] = remaining;
      remaining ^= own;
      x = next;
    }
    return {root, acc};
  }

  // Returns false iff the constraint contradicts earlier ones.
  bool unite(Index a, Index b, std::uint8_t parity) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == parity;
    if (size_[ra] < size_[rb]) {
      std::swap(ra, rb);
      std::swap(pa, pb);
    }
    parent_[rb] = ra;
    parity_[rb] = static_cast<std::uint8_t>(pa ^ pb ^ parity);
    size_[ra] += size_[rb];
    return true;
  }

 private:
  std::vector<Index> parent_;
  std::vector<std::size_t> size_;
  std::vector<std::uint8_t> parity_;
};

}  // namespace qt2ec

#endif  // QT2EC_UNION_FIND_HPP_
