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

#include "revnet/generators.hpp"

#include <numeric>

#include "revnet/simulate.hpp"

namespace revnet {

namespace {

constexpr uint32_t kMaxRippleWidth = 64;
constexpr uint32_t kMaxVerifyWidth = 10;

void check_ripple_width(uint32_t n) {
  if (n < 1 || n > kMaxRippleWidth) {
    raise(errc::width_out_of_range, "operand width must be in 1.." +
                                        std::to_string(kMaxRippleWidth) + ", got " +
                                        std::to_string(n));
  }
}

std::vector<uint32_t> iota_lines(uint32_t first, uint32_t count) {
  std::vector<uint32_t> lines(count);
  std::iota(lines.begin(), lines.end(), first);
  return lines;
}

}  // namespace

adder_design full_adder() {
  circuit c(4, "fa");
  c.label_input(0, "A");
  c.label_input(1, "B");
  c.label_input(2, "C");
  c.set_constant(3, false);
  c.append(builtin_gate("INV0"), {0, 1, 2, 3});
  c.label_output(1, "SUM");
  c.label_output(2, "CARRY");
  c.mark_garbage(0);
  c.mark_garbage(3);

  adder_layout layout;
  layout.a_lines = {0};
  layout.b_lines = {1};
  layout.sum_lines = {1};
  layout.ancilla_lines = {3};
  layout.carry_in_line = 2;
  layout.carry_out_line = 2;
  return adder_design{std::move(c), std::move(layout)};
}

adder_design full_subtractor() {
  circuit c(4, "fs");
  c.label_input(0, "A");
  c.label_input(1, "B");
  c.label_input(2, "C");
  c.set_constant(3, true);
  c.append(builtin_gate("INV0"), {0, 1, 2, 3});
  c.label_output(1, "DIFF");
  c.label_output(3, "BORROW");
  c.mark_garbage(0);
  c.mark_garbage(2);

  adder_layout layout;
  layout.a_lines = {0};
  layout.b_lines = {1};
  layout.sum_lines = {1};
  layout.ancilla_lines = {3};
  layout.carry_in_line = 2;
  layout.carry_out_line = 3;
  return adder_design{std::move(c), std::move(layout)};
}

// Line plan for the ripple designs, one physical line per gate port:
//   0 .. n-1    A_i (ends as garbage P = stage carry/borrow in)
//   n .. 2n-1   B_i (ends as SUM_i / DIFF_i on the Q output)
//   2n          carry-in; the adder ripples the carry here in place
//   2n+1 .. 3n  per-stage D ancillae
adder_design ripple_carry_adder(uint32_t n) {
  check_ripple_width(n);
  const uint32_t carry = 2 * n;
  circuit c(3 * n + 1, "rca" + std::to_string(n));
  const gate_ref inv0 = builtin_gate("INV0");

  for (uint32_t i = 0; i < n; ++i) {
    c.label_input(i, "A" + std::to_string(i));
    c.label_input(n + i, "B" + std::to_string(i));
  }
  c.label_input(carry, "CIN");
  for (uint32_t i = 0; i < n; ++i) {
    c.set_constant(carry + 1 + i, false);
  }
  for (uint32_t i = 0; i < n; ++i) {
    c.append(inv0, {i, n + i, carry, carry + 1 + i});
  }
  for (uint32_t i = 0; i < n; ++i) {
    c.label_output(n + i, "SUM" + std::to_string(i));
    c.mark_garbage(i);
    c.mark_garbage(carry + 1 + i);
  }
  c.label_output(carry, "COUT");

  adder_layout layout;
  layout.a_lines = iota_lines(0, n);
  layout.b_lines = iota_lines(n, n);
  layout.sum_lines = layout.b_lines;
  layout.ancilla_lines = iota_lines(carry + 1, n);
  layout.carry_in_line = carry;
  layout.carry_out_line = carry;
  return adder_design{std::move(c), std::move(layout)};
}

// Same line plan as the adder, but with D ancillae at 1 the borrow leaves a
// stage on its S output (the D line), so stage i+1 takes its C port from
// stage i's ancilla and the final borrow sits on the last ancilla line.
adder_design ripple_borrow_subtractor(uint32_t n) {
  check_ripple_width(n);
  const uint32_t borrow_in = 2 * n;
  circuit c(3 * n + 1, "rcs" + std::to_string(n));
  const gate_ref inv0 = builtin_gate("INV0");

  for (uint32_t i = 0; i < n; ++i) {
    c.label_input(i, "A" + std::to_string(i));
    c.label_input(n + i, "B" + std::to_string(i));
  }
  c.label_input(borrow_in, "BIN");
  for (uint32_t i = 0; i < n; ++i) {
    c.set_constant(borrow_in + 1 + i, true);
  }
  for (uint32_t i = 0; i < n; ++i) {
    const uint32_t c_port = i == 0 ? borrow_in : borrow_in + i;
    c.append(inv0, {i, n + i, c_port, borrow_in + 1 + i});
  }
  for (uint32_t i = 0; i < n; ++i) {
    c.label_output(n + i, "DIFF" + std::to_string(i));
    c.mark_garbage(i);
  }
  c.label_output(3 * n, "BOUT");
  c.mark_garbage(borrow_in);
  for (uint32_t i = 0; i + 1 < n; ++i) {
    c.mark_garbage(borrow_in + 1 + i);
  }

  adder_layout layout;
  layout.a_lines = iota_lines(0, n);
  layout.b_lines = iota_lines(n, n);
  layout.sum_lines = layout.b_lines;
  layout.ancilla_lines = iota_lines(borrow_in + 1, n);
  layout.carry_in_line = borrow_in;
  layout.carry_out_line = 3 * n;
  return adder_design{std::move(c), std::move(layout)};
}

// Line plan (26 lines):
//   0-3   A0..A3          4-7   B0..B3         8  CIN
//   9     carry-in copy, ripples to C4, ends as COUT after the mux
//   10    carry-in copy for the skip mux
//   11-14 P_i propagate bits from the HNGs
//   15-18 HNG D ancillae (end as A_i B_i, garbage)
//   19-22 INV0 D ancillae
//   23-25 AND-chain accumulators; 25 ends as the block propagate P
adder_design carry_skip_adder4() {
  circuit c(26, "csa4");
  const gate_ref f2g = builtin_gate("F2G");
  const gate_ref hng = builtin_gate("HNG");
  const gate_ref inv0 = builtin_gate("INV0");
  const gate_ref frg = builtin_gate("FRG");

  for (uint32_t i = 0; i < 4; ++i) {
    c.label_input(i, "A" + std::to_string(i));
    c.label_input(4 + i, "B" + std::to_string(i));
  }
  c.label_input(8, "CIN");
  for (uint32_t line = 9; line < 26; ++line) {
    c.set_constant(line, false);
  }

  // Level 1: fan the carry-in out and compute P_i = A_i ^ B_i.
  c.append(f2g, {8, 9, 10});
  for (uint32_t i = 0; i < 4; ++i) {
    c.append(hng, {i, 4 + i, 11 + i, 15 + i});
  }
  // Level 2: ripple the sum; line 9 carries C1..C4.
  for (uint32_t i = 0; i < 4; ++i) {
    c.append(inv0, {i, 4 + i, 9, 19 + i});
  }
  // Level 3: P = P0 P1 P2 P3 (FRG with a 0 data input is an AND), then the
  // skip mux FRG(P, C4, Cin) leaves P'·C4 + P·Cin on line 9.
  c.append(frg, {11, 12, 23});
  c.append(frg, {23, 13, 24});
  c.append(frg, {24, 14, 25});
  c.append(frg, {25, 9, 10});

  for (uint32_t i = 0; i < 4; ++i) {
    c.label_output(4 + i, "SUM" + std::to_string(i));
  }
  c.label_output(9, "COUT");
  for (uint32_t line = 0; line < 26; ++line) {
    if ((line >= 4 && line <= 7) || line == 9) {
      continue;
    }
    c.mark_garbage(line);
  }

  adder_layout layout;
  layout.a_lines = iota_lines(0, 4);
  layout.b_lines = iota_lines(4, 4);
  layout.sum_lines = layout.b_lines;
  layout.ancilla_lines = iota_lines(10, 16);
  layout.ancilla_lines.insert(layout.ancilla_lines.begin(), 9);
  layout.carry_in_line = 8;
  layout.carry_out_line = 9;
  layout.skip = skip_lines{
      .propagate_lines = {11, 12, 13, 14},
      .block_propagate_line = 25,
      .fanout_lines = {9, 10},
  };
  return adder_design{std::move(c), std::move(layout)};
}

verify_result verify_against_arithmetic(const circuit& c, const adder_layout& layout,
                                        arith_mode mode) {
  const uint32_t n = uint32_t(layout.a_lines.size());
  if (n == 0 || layout.b_lines.size() != n || layout.sum_lines.size() != n) {
    raise(errc::input_shape_mismatch, "layout operand line groups must share one width");
  }
  if (n > kMaxVerifyWidth) {
    raise(errc::width_out_of_range, "exhaustive verification caps at " +
                                        std::to_string(kMaxVerifyWidth) + "-bit operands, got " +
                                        std::to_string(n));
  }

  verify_result result;
  const uint64_t limit = uint64_t{1} << n;
  const uint64_t mask = limit - 1;
  assignment inputs;
  for (uint64_t a = 0; a < limit; ++a) {
    for (uint64_t b = 0; b < limit; ++b) {
      for (uint64_t cin = 0; cin < 2; ++cin) {
        inputs.clear();
        for (uint32_t i = 0; i < n; ++i) {
          inputs[layout.a_lines[i]] = (a >> i) & 1u;
          inputs[layout.b_lines[i]] = (b >> i) & 1u;
        }
        inputs[layout.carry_in_line] = cin != 0;
        const assignment outputs = run_forward(c, inputs);

        uint64_t got_sum = 0;
        for (uint32_t i = 0; i < n; ++i) {
          got_sum |= uint64_t(outputs.at(layout.sum_lines[i])) << i;
        }
        const bool got_carry = outputs.at(layout.carry_out_line);

        uint64_t want_sum = 0;
        bool want_carry = false;
        if (mode == arith_mode::add) {
          const uint64_t total = a + b + cin;
          want_sum = total & mask;
          want_carry = (total >> n) & 1u;
        } else {
          want_sum = (a - b - cin) & mask;
          want_carry = a < b + cin;
        }

        ++result.cases_checked;
        if (got_sum != want_sum || got_carry != want_carry) {
          result.ok = false;
          result.counterexample = arith_counterexample{
              .a = a,
              .b = b,
              .carry_in = cin != 0,
              .got_sum = got_sum,
              .got_carry = got_carry,
              .want_sum = want_sum,
              .want_carry = want_carry,
          };
          return result;
        }
      }
    }
  }
  result.ok = true;
  return result;
}

}  // namespace revnet
