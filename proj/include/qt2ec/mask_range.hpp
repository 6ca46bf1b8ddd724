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

#ifndef QT2EC_MASK_RANGE_HPP_
#define QT2EC_MASK_RANGE_HPP_

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <utility>

namespace qt2ec {

// Lazy range over masks 0..count-1, each decoded into an Item on access.
// Single-pass; independent ranges may be consumed concurrently.
template <typename Item, typename Decode>
class MaskRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Item;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = Item;

    iterator() = default;
    iterator(const Decode* decode, std::uint64_t mask)
        : decode_(decode), mask_(mask) {}

    Item operator*() const { return (*decode_)(mask_); }
    iterator& operator++() {
      ++mask_;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++mask_;
      return old;
    }
    std::uint64_t mask() const noexcept { return mask_; }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.mask_ == b.mask_;
    }

   private:
    const Decode* decode_ = nullptr;
    std::uint64_t mask_ = 0;
  };

  MaskRange(std::uint64_t count, Decode decode)
      : count_(count), decode_(std::move(decode)) {}

  iterator begin() const { return iterator(&decode_, 0); }
  iterator end() const { return iterator(&decode_, count_); }
  std::uint64_t size() const noexcept { return count_; }

 private:
  std::uint64_t count_;
  Decode decode_;
};

}  // namespace qt2ec

#endif  // QT2EC_MASK_RANGE_HPP_
