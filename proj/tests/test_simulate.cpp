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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <numeric>
#include <random>
#include <set>

#include "revnet/generators.hpp"
#include "revnet/simulate.hpp"
#include "support/random_circuit.hpp"
#include "support/test_util.hpp"

using namespace revnet;
using revnet::test::code_of;

namespace {

// Published single-gate tables, indexed by the packed (A,B,C) input.
// Adder rows are (sum, carry); subtractor rows are (difference, borrow).
constexpr std::array<uint32_t, 8> kAdderRows = {0b00, 0b10, 0b10, 0b01, 0b10, 0b01, 0b01, 0b11};
constexpr std::array<uint32_t, 8> kSubtractorRows = {0b00, 0b11, 0b11, 0b01, 0b10, 0b00, 0b00,
                                                     0b11};

constexpr std::array<const char*, 16> kInv0Rows = {
    "0001", "0010", "1100", "1111", "0100", "0111", "1010", "1001",
    "0101", "0110", "1011", "1000", "0011", "0000", "1110", "1101",
};

}  // namespace

TEST_CASE("forward simulation reproduces the full-adder and subtractor rows") {
  const adder_design fa = full_adder();
  assignment out = run_forward(fa.net, {{0, true}, {1, true}, {2, true}});
  CHECK(out.at(1) == true);   // sum
  CHECK(out.at(2) == true);   // carry
  CHECK(out.at(0) == true);   // garbage P = C
  CHECK(out.at(3) == false);  // garbage S

  const adder_design fs = full_subtractor();
  out = run_forward(fs.net, {{0, false}, {1, true}, {2, true}});
  CHECK(out.at(1) == false);  // difference
  CHECK(out.at(3) == true);   // borrow

  const adder_design rca = ripple_carry_adder(4);
  assignment zeros;
  for (uint32_t line : rca.net.free_lines()) {
    zeros[line] = false;
  }
  out = run_forward(rca.net, zeros);
  for (uint32_t line : rca.layout.sum_lines) {
    CHECK(out.at(line) == false);
  }
  CHECK(out.at(rca.layout.carry_out_line) == false);
}

TEST_CASE("forward simulation validates its input cover") {
  const adder_design fa = full_adder();
  CHECK(code_of([&] { run_forward(fa.net, {{0, true}, {1, true}}); }) == errc::missing_input);
  CHECK(code_of([&] {
          run_forward(fa.net, {{0, true}, {1, true}, {2, true}, {3, false}});
        }) == errc::unexpected_input);
  CHECK(code_of([&] {
          run_forward(fa.net, {{0, true}, {1, true}, {2, true}, {9, false}});
        }) == errc::unexpected_input);
}

TEST_CASE("backward simulation recovers inputs, constants included") {
  const adder_design fa = full_adder();
  const assignment forward = run_forward(fa.net, {{0, true}, {1, true}, {2, true}});
  const assignment recovered = run_backward(fa.net, forward);
  CHECK(recovered.at(0) == true);
  CHECK(recovered.at(1) == true);
  CHECK(recovered.at(2) == true);
  CHECK(recovered.at(3) == false);  // the D constant comes back

  const circuit empty(3);
  const assignment id = run_backward(empty, {{0, true}, {1, false}, {2, true}});
  CHECK(id.at(0) == true);
  CHECK(id.at(1) == false);
  CHECK(id.at(2) == true);

  circuit bare(4);
  bare.append(builtin_gate("INV0"), {0, 1, 2, 3});
  const assignment inputs =
      run_backward(bare, {{0, false}, {1, false}, {2, false}, {3, false}});
  CHECK(inputs.at(0) == true);
  CHECK(inputs.at(1) == true);
  CHECK(inputs.at(2) == false);
  CHECK(inputs.at(3) == true);

  CHECK(code_of([&] { run_backward(bare, {{0, false}}); }) == errc::missing_output);
}

TEST_CASE("enumerate reproduces the published tables") {
  const adder_design fa = full_adder();
  const truth_table_view adder =
      enumerate_table(fa.net, {fa.layout.sum_lines[0], fa.layout.carry_out_line});
  REQUIRE(adder.rows.size() == 8);
  for (uint32_t i = 0; i < 8; ++i) {
    CHECK(adder.rows[i].first.value() == i);
    CHECK(adder.rows[i].second.value() == kAdderRows[i]);
  }

  const adder_design fs = full_subtractor();
  const truth_table_view sub =
      enumerate_table(fs.net, {fs.layout.sum_lines[0], fs.layout.carry_out_line});
  REQUIRE(sub.rows.size() == 8);
  for (uint32_t i = 0; i < 8; ++i) {
    CHECK(sub.rows[i].second.value() == kSubtractorRows[i]);
  }

  circuit bare(4);
  bare.append(builtin_gate("INV0"), {0, 1, 2, 3});
  const truth_table_view table1 = enumerate_table(bare, {0, 1, 2, 3});
  REQUIRE(table1.rows.size() == 16);
  for (uint32_t i = 0; i < 16; ++i) {
    CHECK(table1.rows[i].second.str() == kInv0Rows[i]);
  }
}

TEST_CASE("enumerate rejects oversized sweeps") {
  const circuit wide(21);
  CHECK(code_of([&] { enumerate_table(wide, {0}); }) == errc::too_many_free_inputs);
  CHECK(code_of([&] { enumerate_table(circuit(4), {4}); }) == errc::line_out_of_range);
}

TEST_CASE("round trip holds on random circuits with random inputs") {
  std::mt19937 rng(0xacc1);
  for (int trial = 0; trial < 1000; ++trial) {
    const circuit c = revnet::test::random_circuit(rng, trial % 2 == 0);
    const assignment inputs = revnet::test::random_inputs(rng, c);
    const assignment outputs = run_forward(c, inputs);
    REQUIRE(outputs.size() == c.line_count());
    const assignment recovered = run_backward(c, outputs);
    for (uint32_t line = 0; line < c.line_count(); ++line) {
      const auto constant = c.constants().find(line);
      const bool expected = constant != c.constants().end() ? constant->second : inputs.at(line);
      CHECK(recovered.at(line) == expected);
    }
  }
}

TEST_CASE("constant-free circuits permute their input space") {
  std::mt19937 rng(0xb1b0);
  for (int trial = 0; trial < 40; ++trial) {
    const circuit c = revnet::test::random_circuit(rng, false);
    std::vector<uint32_t> all_lines(c.line_count());
    std::iota(all_lines.begin(), all_lines.end(), 0u);
    const truth_table_view view = enumerate_table(c, all_lines);
    std::set<uint64_t> seen;
    for (const auto& [in, out] : view.rows) {
      seen.insert(out.value());
    }
    CHECK(seen.size() == view.rows.size());
  }
}

TEST_CASE("equivalence checking compares projected tables") {
  const adder_design rca = ripple_carry_adder(4);
  std::vector<uint32_t> rca_outs = rca.layout.sum_lines;
  rca_outs.push_back(rca.layout.carry_out_line);

  const equivalence_result self = check_equivalent(rca.net, rca_outs, rca.net, rca_outs);
  CHECK(self.equivalent);
  CHECK(self.cases_checked == 512);

  const adder_design rcs = ripple_borrow_subtractor(4);
  std::vector<uint32_t> rcs_outs = rcs.layout.sum_lines;
  rcs_outs.push_back(rcs.layout.carry_out_line);

  const equivalence_result diff = check_equivalent(rca.net, rca_outs, rcs.net, rcs_outs);
  CHECK_FALSE(diff.equivalent);
  REQUIRE(diff.counterexample.has_value());
  // The witness must actually tell the two circuits apart.
  assignment in1, in2;
  const auto free1 = rca.net.free_lines();
  const auto free2 = rcs.net.free_lines();
  for (uint32_t pos = 0; pos < free1.size(); ++pos) {
    in1[free1[pos]] = diff.counterexample->bit(pos);
    in2[free2[pos]] = diff.counterexample->bit(pos);
  }
  const assignment out1 = run_forward(rca.net, in1);
  const assignment out2 = run_forward(rcs.net, in2);
  bool differs = false;
  for (size_t pos = 0; pos < rca_outs.size(); ++pos) {
    differs = differs || out1.at(rca_outs[pos]) != out2.at(rcs_outs[pos]);
  }
  CHECK(differs);

  const equivalence_result mirrored = check_equivalent(rcs.net, rcs_outs, rca.net, rca_outs);
  CHECK(mirrored.equivalent == diff.equivalent);
  CHECK(mirrored.counterexample->value() == diff.counterexample->value());

  const std::vector<uint32_t> fa_outs = {1, 2};
  const adder_design fa = full_adder();
  CHECK(code_of([&] { check_equivalent(rca.net, rca_outs, fa.net, fa_outs); }) ==
        errc::input_shape_mismatch);
  const std::vector<uint32_t> carry_only = {rca.layout.carry_out_line};
  CHECK(code_of([&] { check_equivalent(rca.net, rca_outs, rca.net, carry_only); }) ==
        errc::input_shape_mismatch);
}
