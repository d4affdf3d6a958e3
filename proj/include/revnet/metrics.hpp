// Copyright 2026 The revnet authors
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

#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "revnet/circuit.hpp"

namespace revnet {

/// Total-logical-calculation cost: 2-input XOR (alpha), 2-input AND (beta)
/// and NOT (delta) counts. Componentwise additive under composition.
struct tlc_triple {
  uint64_t alpha = 0;
  uint64_t beta = 0;
  uint64_t delta = 0;

  tlc_triple& operator+=(const tlc_triple& other) {
    alpha += other.alpha;
    beta += other.beta;
    delta += other.delta;
    return *this;
  }
  friend tlc_triple operator+(tlc_triple a, const tlc_triple& b) { return a += b; }
  friend bool operator==(const tlc_triple&, const tlc_triple&) = default;
};

struct cost_report {
  std::string circuit_name;
  uint64_t gate_count = 0;
  uint64_t constant_inputs = 0;
  uint64_t garbage_outputs = 0;
  uint32_t unit_delay = 0;
  tlc_triple tlc;
  /// Present only when every placed gate carries transistor metadata.
  std::optional<uint64_t> transistor_count;
};

/// Measures a circuit: structural counts, levelized unit delay, summed TLC
/// and (when complete) summed transistor metadata.
cost_report compute_cost(const circuit& c);

/// Side-by-side report table with per-column minima flagged. Flags depend
/// only on the values, so reordering the rows never changes which
/// (design, column) pairs are flagged.
class comparison_table {
public:
  static constexpr size_t column_count = 8;
  static const std::array<std::string_view, column_count> column_names;

  explicit comparison_table(std::vector<cost_report> rows);

  const std::vector<cost_report>& rows() const { return rows_; }
  bool is_minimum(size_t row, size_t column) const { return minima_.at(row).at(column); }

  /// Column value, absent only for missing transistor metadata.
  static std::optional<uint64_t> column_value(const cost_report& report, size_t column);

  /// Aligned plain-text table; minima carry a '*' suffix.
  std::string to_text() const;
  /// One header row; metrics as integers, TLC as three columns; absent
  /// transistor counts render as an empty field.
  std::string to_csv() const;

private:
  std::vector<cost_report> rows_;
  std::vector<std::array<bool, column_count>> minima_;
};

/// Requires at least one report.
comparison_table compare(std::span<const cost_report> reports);

enum class scaled_design { rca, rcs };

/// Cost reports for ripple designs across operand widths, each in 1..64.
std::vector<cost_report> scaling_report(scaled_design design, std::span<const uint32_t> widths);

}  // namespace revnet
