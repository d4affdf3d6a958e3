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

#include <stdexcept>
#include <string>

namespace revnet {

/// One code per rejected contract, so callers can branch on the reason
/// without string matching.
enum class errc {
  length_mismatch,
  value_out_of_range,
  not_bijective,
  width_mismatch,
  unknown_gate,
  line_out_of_range,
  duplicate_line,
  arity_mismatch,
  conflicts_with_input_label,
  duplicate_label,
  garbage_output_conflict,
  width_out_of_range,
  missing_input,
  unexpected_input,
  missing_output,
  too_many_free_inputs,
  input_shape_mismatch,
  empty_input,
  parse_error,
};

const char* errc_name(errc code);

class error : public std::runtime_error {
public:
  error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& message) {
  throw error(code, message);
}

}  // namespace revnet
