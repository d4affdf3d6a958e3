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

#include <string>
#include <string_view>

#include "revnet/circuit.hpp"

namespace revnet {

// Line-oriented netlist text format (UTF-8, LF endings, '#' comments):
//
//   revnet 1
//   lines <N>
//   input <line> <name>
//   const <line> <0|1>
//   gate <NAME> <line0> <line1> ...    # application order = file order,
//                                      # line0 = the gate's A port
//   output <line> <name>
//   garbage <line> [<line> ...]
//
// Rendering is canonical (inputs, constants, gates, outputs, garbage), so a
// parse of the rendered text reproduces the circuit exactly.

/// Serializes a circuit. Every placed gate must be a catalog gate, since the
/// format stores gates by name only.
std::string render_netlist(const circuit& c);

/// Parses netlist text. All failures, including semantically invalid
/// directives, raise errc::parse_error with a line number.
circuit parse_netlist(std::string_view text, std::string name = "");

}  // namespace revnet
