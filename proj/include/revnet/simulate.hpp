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
#include <span>
#include <utility>
#include <vector>

#include "revnet/circuit.hpp"

namespace revnet {

/// Line index -> bit value. Inputs cover exactly the free lines; outputs
/// cover every line.
using assignment = std::map<uint32_t, bool>;

/// Initializes constants, applies every gate in list order and returns the
/// final value of all lines.
assignment run_forward(const circuit& c, const assignment& inputs);

/// Applies the inverse gates in reverse order to an all-lines output
/// assignment, recovering the initial value of every line (constants
/// included).
assignment run_backward(const circuit& c, const assignment& outputs);

/// Enumerated function table of a circuit, projected onto chosen output
/// lines. Row order is ascending over the packed input word; the first free
/// line is the most significant input bit and output_lines[0] the most
/// significant output bit.
struct truth_table_view {
  std::vector<uint32_t> free_input_lines;
  std::vector<uint32_t> output_lines;
  std::vector<std::pair<bit_word, bit_word>> rows;
};

/// Runs the circuit on all 2^f free-input words, f <= 20.
truth_table_view enumerate_table(const circuit& c, std::vector<uint32_t> output_lines);

struct equivalence_result {
  bool equivalent = false;
  /// First differing input word over the first circuit's free lines.
  std::optional<bit_word> counterexample;
  uint64_t cases_checked = 0;
};

/// Compares two circuits on selected output lines over every free-input
/// word. Free lines correspond positionally in ascending order; the output
/// selections pair up index by index.
equivalence_result check_equivalent(const circuit& c1, std::span<const uint32_t> outputs1,
                                    const circuit& c2, std::span<const uint32_t> outputs2);

}  // namespace revnet
