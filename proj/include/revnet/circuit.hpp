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

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "revnet/gate.hpp"

namespace revnet {

/// One placed gate; lines[i] is the circuit line wired to the gate's i-th
/// port (port 0 = the gate's A line).
struct gate_instance {
  gate_ref g;
  std::vector<uint32_t> lines;
};

struct violation {
  errc code;
  std::string message;
};

/// A reversible netlist: gates applied in list order over a fixed set of
/// lines, with constant-input bindings, garbage markings and I/O labels.
///
/// The line count is the same before and after every gate, so width is
/// conserved by construction. Builder methods validate eagerly and are meant
/// for a single-owner build phase; a completed circuit is safe to share
/// across concurrent readers.
class circuit {
public:
  static constexpr uint32_t max_lines = 1024;

  explicit circuit(uint32_t line_count, std::string name = "");

  /// Assembles a circuit without checking any cross-field invariant; pair
  /// with validate() to lint netlists produced outside the builder path.
  static circuit from_parts(uint32_t line_count, std::string name,
                            std::vector<gate_instance> instances,
                            std::map<uint32_t, bool> constants, std::set<uint32_t> garbage,
                            std::map<uint32_t, std::string> input_labels,
                            std::map<uint32_t, std::string> output_labels);

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  uint32_t line_count() const { return line_count_; }
  const std::vector<gate_instance>& instances() const { return instances_; }
  const std::map<uint32_t, bool>& constants() const { return constants_; }
  const std::set<uint32_t>& garbage() const { return garbage_; }
  const std::map<uint32_t, std::string>& input_labels() const { return input_labels_; }
  const std::map<uint32_t, std::string>& output_labels() const { return output_labels_; }

  void append(gate_ref g, std::vector<uint32_t> lines);
  void set_constant(uint32_t line, bool value);
  void mark_garbage(uint32_t line);
  void mark_garbage(std::span<const uint32_t> lines);
  void label_input(uint32_t line, std::string label);
  void label_output(uint32_t line, std::string label);

  /// Non-constant lines in ascending order; these are the simulation inputs.
  std::vector<uint32_t> free_lines() const;

  std::optional<uint32_t> find_input(std::string_view label) const;
  std::optional<uint32_t> find_output(std::string_view label) const;

  /// Checks every structural invariant and returns all violations found,
  /// not just the first. Empty result means the circuit is well formed.
  std::vector<violation> validate() const;

  /// Gate order reversed and every gate replaced by its inverse, so running
  /// the result on this circuit's outputs restores its inputs. All lines of
  /// the inverse are free; input/output labels swap roles.
  circuit inverse() const;

  /// Unit-delay depth by ASAP levelization: every gate costs one level, and
  /// gates sharing no line may share a level. A chain of n gates threaded on
  /// one line has depth n.
  uint32_t depth() const;

private:
  void check_line(uint32_t line) const;

  uint32_t line_count_;
  std::string name_;
  std::vector<gate_instance> instances_;
  std::map<uint32_t, bool> constants_;
  std::set<uint32_t> garbage_;
  std::map<uint32_t, std::string> input_labels_;
  std::map<uint32_t, std::string> output_labels_;
};

}  // namespace revnet
