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

#include "revnet/circuit.hpp"

#include <algorithm>
#include <unordered_set>

namespace revnet {

namespace {

bool valid_label(const std::string& label) {
  if (label.empty()) {
    return false;
  }
  for (char c : label) {
    if (c <= ' ' || c > '~' || c == '#') {
      return false;
    }
  }
  return true;
}

}  // namespace

circuit::circuit(uint32_t line_count, std::string name)
    : line_count_(line_count), name_(std::move(name)) {
  if (line_count < 1 || line_count > max_lines) {
    raise(errc::width_out_of_range, "line count must be in 1.." + std::to_string(max_lines) +
                                        ", got " + std::to_string(line_count));
  }
}

circuit circuit::from_parts(uint32_t line_count, std::string name,
                            std::vector<gate_instance> instances,
                            std::map<uint32_t, bool> constants, std::set<uint32_t> garbage,
                            std::map<uint32_t, std::string> input_labels,
                            std::map<uint32_t, std::string> output_labels) {
  circuit c(line_count, std::move(name));
  c.instances_ = std::move(instances);
  c.constants_ = std::move(constants);
  c.garbage_ = std::move(garbage);
  c.input_labels_ = std::move(input_labels);
  c.output_labels_ = std::move(output_labels);
  return c;
}

void circuit::check_line(uint32_t line) const {
  if (line >= line_count_) {
    raise(errc::line_out_of_range, "line " + std::to_string(line) + " out of range (circuit has " +
                                       std::to_string(line_count_) + " lines)");
  }
}

void circuit::append(gate_ref g, std::vector<uint32_t> lines) {
  if (!g) {
    raise(errc::unknown_gate, "null gate");
  }
  if (lines.size() != g->arity()) {
    raise(errc::arity_mismatch, "gate " + g->name() + " has " + std::to_string(g->arity()) +
                                    " ports, got " + std::to_string(lines.size()) + " lines");
  }
  std::unordered_set<uint32_t> seen;
  for (uint32_t line : lines) {
    check_line(line);
    if (!seen.insert(line).second) {
      raise(errc::duplicate_line,
            "gate " + g->name() + " wired to line " + std::to_string(line) + " twice");
    }
  }
  instances_.push_back(gate_instance{std::move(g), std::move(lines)});
}

void circuit::set_constant(uint32_t line, bool value) {
  check_line(line);
  if (input_labels_.count(line)) {
    raise(errc::conflicts_with_input_label,
          "line " + std::to_string(line) + " is labeled input '" + input_labels_.at(line) +
              "' and cannot be a constant");
  }
  constants_[line] = value;
}

void circuit::mark_garbage(uint32_t line) {
  check_line(line);
  if (output_labels_.count(line)) {
    raise(errc::garbage_output_conflict, "line " + std::to_string(line) + " is labeled output '" +
                                             output_labels_.at(line) +
                                             "' and cannot be garbage");
  }
  garbage_.insert(line);
}

void circuit::mark_garbage(std::span<const uint32_t> lines) {
  for (uint32_t line : lines) {
    mark_garbage(line);
  }
}

void circuit::label_input(uint32_t line, std::string label) {
  check_line(line);
  if (!valid_label(label)) {
    raise(errc::value_out_of_range, "invalid label '" + label + "'");
  }
  if (constants_.count(line)) {
    raise(errc::conflicts_with_input_label,
          "line " + std::to_string(line) + " is a constant and cannot be a labeled input");
  }
  for (const auto& [other, name] : input_labels_) {
    if (name == label && other != line) {
      raise(errc::duplicate_label, "input label '" + label + "' already used on line " +
                                       std::to_string(other));
    }
  }
  input_labels_[line] = std::move(label);
}

void circuit::label_output(uint32_t line, std::string label) {
  check_line(line);
  if (!valid_label(label)) {
    raise(errc::value_out_of_range, "invalid label '" + label + "'");
  }
  if (garbage_.count(line)) {
    raise(errc::garbage_output_conflict,
          "line " + std::to_string(line) + " is garbage and cannot be a labeled output");
  }
  for (const auto& [other, name] : output_labels_) {
    if (name == label && other != line) {
      raise(errc::duplicate_label, "output label '" + label + "' already used on line " +
                                       std::to_string(other));
    }
  }
  output_labels_[line] = std::move(label);
}

std::vector<uint32_t> circuit::free_lines() const {
  std::vector<uint32_t> lines;
  lines.reserve(line_count_ - constants_.size());
  for (uint32_t line = 0; line < line_count_; ++line) {
    if (!constants_.count(line)) {
      lines.push_back(line);
    }
  }
  return lines;
}

std::optional<uint32_t> circuit::find_input(std::string_view label) const {
  for (const auto& [line, name] : input_labels_) {
    if (name == label) {
      return line;
    }
  }
  return std::nullopt;
}

std::optional<uint32_t> circuit::find_output(std::string_view label) const {
  for (const auto& [line, name] : output_labels_) {
    if (name == label) {
      return line;
    }
  }
  return std::nullopt;
}

std::vector<violation> circuit::validate() const {
  std::vector<violation> found;
  auto report = [&](errc code, std::string message) {
    found.push_back(violation{code, std::move(message)});
  };

  for (size_t i = 0; i < instances_.size(); ++i) {
    const gate_instance& inst = instances_[i];
    const std::string where = "instance " + std::to_string(i) + " (" + inst.g->name() + ")";
    if (inst.lines.size() != inst.g->arity()) {
      report(errc::arity_mismatch, where + ": " + std::to_string(inst.lines.size()) +
                                       " lines for arity " + std::to_string(inst.g->arity()));
    }
    std::unordered_set<uint32_t> seen;
    for (uint32_t line : inst.lines) {
      if (line >= line_count_) {
        report(errc::line_out_of_range, where + ": line " + std::to_string(line) + " out of range");
      } else if (!seen.insert(line).second) {
        report(errc::duplicate_line, where + ": line " + std::to_string(line) + " used twice");
      }
    }
  }

  for (const auto& [line, value] : constants_) {
    if (line >= line_count_) {
      report(errc::line_out_of_range, "constant on line " + std::to_string(line) + " out of range");
    }
    if (input_labels_.count(line)) {
      report(errc::conflicts_with_input_label,
             "line " + std::to_string(line) + " is both a constant and a labeled input");
    }
  }
  for (uint32_t line : garbage_) {
    if (line >= line_count_) {
      report(errc::line_out_of_range, "garbage line " + std::to_string(line) + " out of range");
    }
    if (output_labels_.count(line)) {
      report(errc::garbage_output_conflict,
             "line " + std::to_string(line) + " is both garbage and a labeled output");
    }
  }

  auto check_labels = [&](const std::map<uint32_t, std::string>& labels, const char* side) {
    std::unordered_set<std::string> names;
    for (const auto& [line, name] : labels) {
      if (line >= line_count_) {
        report(errc::line_out_of_range,
               std::string(side) + " label '" + name + "' on out-of-range line " +
                   std::to_string(line));
      }
      if (!names.insert(name).second) {
        report(errc::duplicate_label, std::string(side) + " label '" + name + "' used twice");
      }
    }
  };
  check_labels(input_labels_, "input");
  check_labels(output_labels_, "output");

  return found;
}

circuit circuit::inverse() const {
  circuit inv(line_count_, name_.empty() ? "" : name_ + "~");
  inv.instances_.reserve(instances_.size());
  for (auto it = instances_.rbegin(); it != instances_.rend(); ++it) {
    inv.instances_.push_back(gate_instance{it->g->inverted(), it->lines});
  }
  // The inverse consumes every line, so nothing stays constant; labels swap
  // sides because this circuit's outputs are the inverse's inputs.
  inv.input_labels_ = output_labels_;
  inv.output_labels_ = input_labels_;
  return inv;
}

uint32_t circuit::depth() const {
  std::vector<uint32_t> line_level(line_count_, 0);
  uint32_t depth = 0;
  for (const gate_instance& inst : instances_) {
    uint32_t level = 0;
    for (uint32_t line : inst.lines) {
      level = std::max(level, line_level[line]);
    }
    ++level;
    for (uint32_t line : inst.lines) {
      line_level[line] = level;
    }
    depth = std::max(depth, level);
  }
  return depth;
}

}  // namespace revnet
