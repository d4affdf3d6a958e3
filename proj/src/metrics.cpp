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

#include "revnet/metrics.hpp"

#include <algorithm>
#include <sstream>

#include "revnet/generators.hpp"

namespace revnet {

cost_report compute_cost(const circuit& c) {
  cost_report report;
  report.circuit_name = c.name();
  report.gate_count = c.instances().size();
  report.constant_inputs = c.constants().size();
  report.garbage_outputs = c.garbage().size();
  report.unit_delay = c.depth();

  bool transistors_complete = true;
  uint64_t transistors = 0;
  for (const gate_instance& inst : c.instances()) {
    const cost_profile& cost = inst.g->cost();
    report.tlc += tlc_triple{cost.alpha, cost.beta, cost.delta};
    if (cost.transistor_count) {
      transistors += *cost.transistor_count;
    } else {
      transistors_complete = false;
    }
  }
  if (transistors_complete) {
    report.transistor_count = transistors;
  }
  return report;
}

const std::array<std::string_view, comparison_table::column_count>
    comparison_table::column_names = {
        "gates",  "constant_inputs", "garbage_outputs", "unit_delay",
        "alpha",  "beta",            "delta",           "transistors",
};

std::optional<uint64_t> comparison_table::column_value(const cost_report& report, size_t column) {
  switch (column) {
    case 0: return report.gate_count;
    case 1: return report.constant_inputs;
    case 2: return report.garbage_outputs;
    case 3: return report.unit_delay;
    case 4: return report.tlc.alpha;
    case 5: return report.tlc.beta;
    case 6: return report.tlc.delta;
    case 7: return report.transistor_count;
  }
  return std::nullopt;
}

comparison_table::comparison_table(std::vector<cost_report> rows) : rows_(std::move(rows)) {
  minima_.assign(rows_.size(), {});
  for (size_t col = 0; col < column_count; ++col) {
    std::optional<uint64_t> best;
    for (const cost_report& row : rows_) {
      const auto value = column_value(row, col);
      if (value && (!best || *value < *best)) {
        best = value;
      }
    }
    if (!best) {
      continue;
    }
    for (size_t r = 0; r < rows_.size(); ++r) {
      minima_[r][col] = column_value(rows_[r], col) == best;
    }
  }
}

std::string comparison_table::to_text() const {
  std::vector<std::vector<std::string>> cells;
  cells.reserve(rows_.size());
  for (size_t r = 0; r < rows_.size(); ++r) {
    std::vector<std::string> row;
    row.push_back(rows_[r].circuit_name);
    for (size_t col = 0; col < column_count; ++col) {
      const auto value = column_value(rows_[r], col);
      std::string cell = value ? std::to_string(*value) : "-";
      if (minima_[r][col]) {
        cell += '*';
      }
      row.push_back(std::move(cell));
    }
    cells.push_back(std::move(row));
  }

  std::vector<size_t> width(column_count + 1, 0);
  width[0] = std::string_view("design").size();
  for (size_t col = 0; col < column_count; ++col) {
    width[col + 1] = column_names[col].size();
  }
  for (const auto& row : cells) {
    for (size_t i = 0; i <= column_count; ++i) {
      width[i] = std::max(width[i], row[i].size());
    }
  }

  std::ostringstream out;
  auto emit = [&](const std::string& cell, size_t i, bool left) {
    if (left) {
      out << cell << std::string(width[i] - cell.size(), ' ');
    } else {
      out << std::string(width[i] - cell.size(), ' ') << cell;
    }
    out << (i == column_count ? "\n" : "  ");
  };
  emit("design", 0, true);
  for (size_t col = 0; col < column_count; ++col) {
    emit(std::string(column_names[col]), col + 1, false);
  }
  for (const auto& row : cells) {
    emit(row[0], 0, true);
    for (size_t col = 0; col < column_count; ++col) {
      emit(row[col + 1], col + 1, false);
    }
  }
  return out.str();
}

std::string comparison_table::to_csv() const {
  std::ostringstream out;
  out << "design";
  for (std::string_view name : column_names) {
    out << ',' << name;
  }
  out << '\n';
  for (const cost_report& row : rows_) {
    out << row.circuit_name;
    for (size_t col = 0; col < column_count; ++col) {
      const auto value = column_value(row, col);
      out << ',';
      if (value) {
        out << *value;
      }
    }
    out << '\n';
  }
  return out.str();
}

comparison_table compare(std::span<const cost_report> reports) {
  if (reports.empty()) {
    raise(errc::empty_input, "nothing to compare");
  }
  return comparison_table(std::vector<cost_report>(reports.begin(), reports.end()));
}

std::vector<cost_report> scaling_report(scaled_design design, std::span<const uint32_t> widths) {
  std::vector<cost_report> reports;
  reports.reserve(widths.size());
  for (uint32_t n : widths) {
    const adder_design built =
        design == scaled_design::rca ? ripple_carry_adder(n) : ripple_borrow_subtractor(n);
    reports.push_back(compute_cost(built.net));
  }
  return reports;
}

}  // namespace revnet
