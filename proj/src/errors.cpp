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

#include "revnet/errors.hpp"

namespace revnet {

const char* errc_name(errc code) {
  switch (code) {
    case errc::length_mismatch: return "length_mismatch";
    case errc::value_out_of_range: return "value_out_of_range";
    case errc::not_bijective: return "not_bijective";
    case errc::width_mismatch: return "width_mismatch";
    case errc::unknown_gate: return "unknown_gate";
    case errc::line_out_of_range: return "line_out_of_range";
    case errc::duplicate_line: return "duplicate_line";
    case errc::arity_mismatch: return "arity_mismatch";
    case errc::conflicts_with_input_label: return "conflicts_with_input_label";
    case errc::duplicate_label: return "duplicate_label";
    case errc::garbage_output_conflict: return "garbage_output_conflict";
    case errc::width_out_of_range: return "width_out_of_range";
    case errc::missing_input: return "missing_input";
    case errc::unexpected_input: return "unexpected_input";
    case errc::missing_output: return "missing_output";
    case errc::too_many_free_inputs: return "too_many_free_inputs";
    case errc::input_shape_mismatch: return "input_shape_mismatch";
    case errc::empty_input: return "empty_input";
    case errc::parse_error: return "parse_error";
  }
  return "unknown";
}

}  // namespace revnet
