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

#ifndef QT2EC_ERRORS_HPP_
#define QT2EC_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qt2ec {

// Malformed textual input (edge lists, graph6).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller violated an operation's precondition.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The request is well-formed but deliberately declined: output caps,
// disconnected input where a connected graph is required, and so on.
class RefusalError : public std::runtime_error {
 public:
  RefusalError(const std::string& what, std::size_t quantity = 0)
      : std::runtime_error(what), quantity_(quantity) {}

  // The offending quantity (class count, edge count, ...) when relevant.
  std::size_t quantity() const noexcept { return quantity_; }

 private:
  std::size_t quantity_;
};

// An edge class admits no quasi-transitive orientation.
class InfeasibleError : public std::runtime_error {
 public:
  InfeasibleError(const std::string& what, std::size_t edge)
      : std::runtime_error(what), edge_(edge) {}

  // Index of an edge that the forcing rule orients both ways.
  std::size_t edge() const noexcept { return edge_; }

 private:
  std::size_t edge_;
};

}  // namespace qt2ec

#endif  // QT2EC_ERRORS_HPP_
