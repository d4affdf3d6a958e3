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

#include <optional>
#include <vector>

#include "revnet/circuit.hpp"

namespace revnet {

/// Carry-skip wiring landmarks of a generated adder.
struct skip_lines {
  std::vector<uint32_t> propagate_lines;  ///< P_i = A_i ^ B_i, bit order LSB first
  uint32_t block_propagate_line = 0;      ///< P = P_0 P_1 P_2 P_3 after the AND chain
  std::vector<uint32_t> fanout_lines;     ///< carry-in copies (ripple chain, skip mux)
};

/// Where a generated arithmetic circuit keeps its operands and results.
/// Index i of a_lines/b_lines/sum_lines is the bit of weight 2^i.
struct adder_layout {
  std::vector<uint32_t> a_lines;
  std::vector<uint32_t> b_lines;
  std::vector<uint32_t> sum_lines;
  std::vector<uint32_t> ancilla_lines;
  uint32_t carry_in_line = 0;
  uint32_t carry_out_line = 0;
  std::optional<skip_lines> skip;
};

struct adder_design {
  circuit net;
  adder_layout layout;
};

/// One INV0 with the D line held at 0: sum on the Q line, carry on the R
/// line, P and S garbage.
adder_design full_adder();

/// One INV0 with the D line held at 1: difference on the Q line, borrow on
/// the S line, P and R garbage.
adder_design full_subtractor();

/// n INV0 stages rippling the carry along one shared line; D ancillae all 0.
/// Inputs A0..A(n-1), B0.., CIN; outputs SUM0.. and COUT. n in 1..64.
adder_design ripple_carry_adder(uint32_t n);

/// n INV0 stages with D ancillae all 1; each stage's borrow leaves on its S
/// line and feeds the next stage's C port. Computes A - B - Bin with a
/// borrow-out. n in 1..64.
adder_design ripple_borrow_subtractor(uint32_t n);

/// The 4-bit carry-skip adder: an F2G fans the carry-in out, four HNGs
/// produce propagate bits and operand copies, four INV0s ripple the sum, and
/// four FRGs form the propagate AND chain plus the skip mux computing
/// Cout = P'·C4 ^ P·Cin. Census: 4 HNG + 4 INV0 + 4 FRG + 1 F2G.
adder_design carry_skip_adder4();

enum class arith_mode { add, subtract };

struct arith_counterexample {
  uint64_t a = 0;
  uint64_t b = 0;
  bool carry_in = false;
  uint64_t got_sum = 0;
  bool got_carry = false;
  uint64_t want_sum = 0;
  bool want_carry = false;
};

struct verify_result {
  bool ok = false;
  uint64_t cases_checked = 0;
  std::optional<arith_counterexample> counterexample;
};

/// Exhaustively checks a circuit against integer arithmetic over every
/// (A, B, carry-in) triple, in that nesting order. Add mode expects
/// sum = (A+B+Cin) mod 2^n with the overflow on the carry-out line;
/// subtract mode expects (A-B-Bin) mod 2^n with borrow-out = (A < B+Bin).
/// Operand width is capped at 10 to keep the sweep exhaustive.
verify_result verify_against_arithmetic(const circuit& c, const adder_layout& layout,
                                        arith_mode mode);

}  // namespace revnet
