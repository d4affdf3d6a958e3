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

#include "revnet/simulate.hpp"

#include <algorithm>

namespace revnet {

namespace {

constexpr uint32_t kMaxFreeInputs = 20;

void apply_forward(const circuit& c, std::vector<uint8_t>& state) {
  for (const gate_instance& inst : c.instances()) {
    const uint32_t arity = inst.g->arity();
    uint64_t word = 0;
    for (uint32_t pos = 0; pos < arity; ++pos) {
      word |= uint64_t(state[inst.lines[pos]]) << (arity - 1 - pos);
    }
    const bit_word out = inst.g->forward(bit_word(arity, word));
    for (uint32_t pos = 0; pos < arity; ++pos) {
      state[inst.lines[pos]] = out.bit(pos);
    }
  }
}

assignment state_to_assignment(const std::vector<uint8_t>& state) {
  assignment result;
  for (uint32_t line = 0; line < state.size(); ++line) {
    result[line] = state[line] != 0;
  }
  return result;
}

}  // namespace

assignment run_forward(const circuit& c, const assignment& inputs) {
  std::vector<uint8_t> state(c.line_count(), 0);
  for (const auto& [line, value] : inputs) {
    if (line >= c.line_count()) {
      raise(errc::unexpected_input, "input for line " + std::to_string(line) + " out of range");
    }
    if (c.constants().count(line)) {
      raise(errc::unexpected_input,
            "line " + std::to_string(line) + " is a constant, not a free input");
    }
    state[line] = value;
  }
  for (uint32_t line = 0; line < c.line_count(); ++line) {
    if (!c.constants().count(line) && !inputs.count(line)) {
      raise(errc::missing_input, "no input value for free line " + std::to_string(line));
    }
  }
  for (const auto& [line, value] : c.constants()) {
    state[line] = value;
  }
  apply_forward(c, state);
  return state_to_assignment(state);
}

assignment run_backward(const circuit& c, const assignment& outputs) {
  std::vector<uint8_t> state(c.line_count(), 0);
  for (const auto& [line, value] : outputs) {
    if (line >= c.line_count()) {
      raise(errc::line_out_of_range, "output for line " + std::to_string(line) + " out of range");
    }
    state[line] = value;
  }
  for (uint32_t line = 0; line < c.line_count(); ++line) {
    if (!outputs.count(line)) {
      raise(errc::missing_output, "no output value for line " + std::to_string(line));
    }
  }
  const auto& instances = c.instances();
  for (auto it = instances.rbegin(); it != instances.rend(); ++it) {
    const uint32_t arity = it->g->arity();
    uint64_t word = 0;
    for (uint32_t pos = 0; pos < arity; ++pos) {
      word |= uint64_t(state[it->lines[pos]]) << (arity - 1 - pos);
    }
    const bit_word in = it->g->backward(bit_word(arity, word));
    for (uint32_t pos = 0; pos < arity; ++pos) {
      state[it->lines[pos]] = in.bit(pos);
    }
  }
  return state_to_assignment(state);
}

truth_table_view enumerate_table(const circuit& c, std::vector<uint32_t> output_lines) {
  for (uint32_t line : output_lines) {
    if (line >= c.line_count()) {
      raise(errc::line_out_of_range,
            "output line " + std::to_string(line) + " out of range");
    }
  }
  truth_table_view view;
  view.free_input_lines = c.free_lines();
  view.output_lines = std::move(output_lines);
  const uint32_t f = uint32_t(view.free_input_lines.size());
  if (f > kMaxFreeInputs) {
    raise(errc::too_many_free_inputs, "circuit has " + std::to_string(f) +
                                          " free inputs, enumeration caps at " +
                                          std::to_string(kMaxFreeInputs));
  }

  const uint64_t rows = uint64_t{1} << f;
  view.rows.reserve(rows);
  std::vector<uint8_t> state(c.line_count(), 0);
  for (uint64_t word = 0; word < rows; ++word) {
    std::fill(state.begin(), state.end(), 0);
    for (uint32_t pos = 0; pos < f; ++pos) {
      state[view.free_input_lines[pos]] = (word >> (f - 1 - pos)) & 1u;
    }
    for (const auto& [line, value] : c.constants()) {
      state[line] = value;
    }
    apply_forward(c, state);
    bit_word out(uint32_t(view.output_lines.size()), 0);
    for (uint32_t pos = 0; pos < view.output_lines.size(); ++pos) {
      out.set_bit(pos, state[view.output_lines[pos]] != 0);
    }
    view.rows.emplace_back(bit_word(f, word), out);
  }
  return view;
}

equivalence_result check_equivalent(const circuit& c1, std::span<const uint32_t> outputs1,
                                    const circuit& c2, std::span<const uint32_t> outputs2) {
  const std::vector<uint32_t> free1 = c1.free_lines();
  const std::vector<uint32_t> free2 = c2.free_lines();
  if (free1.size() != free2.size()) {
    raise(errc::input_shape_mismatch, "free input counts differ: " + std::to_string(free1.size()) +
                                          " vs " + std::to_string(free2.size()));
  }
  if (outputs1.size() != outputs2.size()) {
    raise(errc::input_shape_mismatch, "output selections differ in size: " +
                                          std::to_string(outputs1.size()) + " vs " +
                                          std::to_string(outputs2.size()));
  }
  for (uint32_t line : outputs1) {
    if (line >= c1.line_count()) {
      raise(errc::line_out_of_range, "output line " + std::to_string(line) + " out of range");
    }
  }
  for (uint32_t line : outputs2) {
    if (line >= c2.line_count()) {
      raise(errc::line_out_of_range, "output line " + std::to_string(line) + " out of range");
    }
  }
  const uint32_t f = uint32_t(free1.size());
  if (f > kMaxFreeInputs) {
    raise(errc::too_many_free_inputs,
          "equivalence check over " + std::to_string(f) + " free inputs exceeds the cap of " +
              std::to_string(kMaxFreeInputs));
  }

  equivalence_result result;
  std::vector<uint8_t> state1(c1.line_count(), 0);
  std::vector<uint8_t> state2(c2.line_count(), 0);
  const uint64_t rows = uint64_t{1} << f;
  for (uint64_t word = 0; word < rows; ++word) {
    std::fill(state1.begin(), state1.end(), 0);
    std::fill(state2.begin(), state2.end(), 0);
    for (uint32_t pos = 0; pos < f; ++pos) {
      const uint8_t bit = (word >> (f - 1 - pos)) & 1u;
      state1[free1[pos]] = bit;
      state2[free2[pos]] = bit;
    }
    for (const auto& [line, value] : c1.constants()) {
      state1[line] = value;
    }
    for (const auto& [line, value] : c2.constants()) {
      state2[line] = value;
    }
    apply_forward(c1, state1);
    apply_forward(c2, state2);
    ++result.cases_checked;
    for (size_t pos = 0; pos < outputs1.size(); ++pos) {
      if (state1[outputs1[pos]] != state2[outputs2[pos]]) {
        result.equivalent = false;
        result.counterexample = bit_word(f, word);
        return result;
      }
    }
  }
  result.equivalent = true;
  return result;
}

}  // namespace revnet
