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

#ifndef QT2EC_REPORT_HPP_
#define QT2EC_REPORT_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "json.hpp"

namespace qt2ec {

inline constexpr const char* kReportSchema = "qt2ec.report/1";

// Outcome of one named check on one graph.
struct CheckRecord {
  std::string check;
  std::string graph6;
  bool passed = true;
  nlohmann::json witness;  // null on pass; reproducible evidence on failure
  std::string note;        // instance counts, interpretations, skips
  std::int64_t micros = 0;

  nlohmann::json to_json(bool with_timing = true) const {
    nlohmann::json j{{"schema", kReportSchema},
                     {"check", check},
                     {"graph6", graph6},
                     {"passed", passed}};
    if (with_timing) j["micros"] = micros;
    if (!witness.is_null()) j["witness"] = witness;
    if (!note.empty()) j["note"] = note;
    return j;
  }
};

class VerificationReport {
 public:
  void add(CheckRecord record) { records_.push_back(std::move(record)); }

  void pass(std::string check, std::string graph6, std::string note = {}) {
    add({std::move(check), std::move(graph6), true, nullptr, std::move(note)});
  }

  void fail(std::string check, std::string graph6, nlohmann::json witness,
            std::string note = {}) {
    add({std::move(check), std::move(graph6), false, std::move(witness),
         std::move(note)});
  }

  void merge(VerificationReport other) {
    records_.insert(records_.end(),
                    std::make_move_iterator(other.records_.begin()),
                    std::make_move_iterator(other.records_.end()));
  }

  // Stable key order so merged parallel results serialize identically.
  void sort() {
    std::stable_sort(records_.begin(), records_.end(),
                     [](const CheckRecord& a, const CheckRecord& b) {
                       return std::tie(a.graph6, a.check) <
                              std::tie(b.graph6, b.check);
                     });
  }

  // Sets the timing of every record from index `from` onwards.
  void stamp(std::size_t from, std::int64_t micros) {
    for (std::size_t i = from; i < records_.size(); ++i) {
      records_[i].micros = micros;
    }
  }

  const std::vector<CheckRecord>& records() const noexcept { return records_; }
  std::size_t size() const noexcept { return records_.size(); }

  std::size_t failures() const {
    return static_cast<std::size_t>(
        std::count_if(records_.begin(), records_.end(),
                      [](const CheckRecord& r) { return !r.passed; }));
  }
  bool all_passed() const { return failures() == 0; }

  const CheckRecord* find(const std::string& check) const {
    for (const auto& r : records_) {
      if (r.check == check) return &r;
    }
    return nullptr;
  }

  struct Tally {
    std::size_t passed = 0;
    std::size_t failed = 0;
  };

  std::map<std::string, Tally> tally() const {
    std::map<std::string, Tally> out;
    for (const auto& r : records_) {
      auto& t = out[r.check];
      (r.passed ? t.passed : t.failed) += 1;
    }
    return out;
  }

  // Without timing the output is byte-identical across runs.
  std::string to_jsonl(bool with_timing = true) const {
    std::string out;
    for (const auto& r : records_) {
      out += r.to_json(with_timing).dump();
      out += '\n';
    }
    return out;
  }

 private:
  std::vector<CheckRecord> records_;
};

}  // namespace qt2ec

#endif  // QT2EC_REPORT_HPP_
