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

// End-to-end acceptance suite. Each numbered criterion prints one PASS or
// FAIL line; the exit code is the number of failures.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "revnet/generators.hpp"
#include "revnet/metrics.hpp"
#include "revnet/netlist.hpp"
#include "revnet/simulate.hpp"
#include "support/random_circuit.hpp"
#include "support/subprocess.hpp"

using namespace revnet;
using revnet::test::read_file;
using revnet::test::run_command;
using revnet::test::run_result;
using revnet::test::write_file;

namespace {

const std::string cli = REVNET_CLI_PATH;
const std::string workdir = "acceptance_tmp";

std::string path_in(const std::string& name) { return workdir + "/" + name; }

std::ostringstream detail;

bool expect(bool ok, const std::string& what) {
  if (!ok) {
    detail << "    mismatch: " << what << "\n";
  }
  return ok;
}

constexpr const char* kGatesInv0Expected =
    "A B C D | P Q R S\n"
    "0 0 0 0 | 0 0 0 1\n"
    "0 0 0 1 | 0 0 1 0\n"
    "0 0 1 0 | 1 1 0 0\n"
    "0 0 1 1 | 1 1 1 1\n"
    "0 1 0 0 | 0 1 0 0\n"
    "0 1 0 1 | 0 1 1 1\n"
    "0 1 1 0 | 1 0 1 0\n"
    "0 1 1 1 | 1 0 0 1\n"
    "1 0 0 0 | 0 1 0 1\n"
    "1 0 0 1 | 0 1 1 0\n"
    "1 0 1 0 | 1 0 1 1\n"
    "1 0 1 1 | 1 0 0 0\n"
    "1 1 0 0 | 0 0 1 1\n"
    "1 1 0 1 | 0 0 0 0\n"
    "1 1 1 0 | 1 1 1 0\n"
    "1 1 1 1 | 1 1 0 1\n";

// 1. The CLI emits the 16 published INV0 rows and the bijection validation
//    stands behind them.
bool criterion_table1() {
  const run_result result = run_command(cli + " gates INV0");
  bool ok = expect(result.exit_code == 0, "gates INV0 exit code");
  ok &= expect(result.output == kGatesInv0Expected, "gates INV0 table text");

  const std::vector<uint32_t> rows = {1, 2, 12, 15, 4, 7, 10, 9, 5, 6, 11, 8, 3, 0, 14, 13};
  const gate_ref rebuilt = make_gate("INV0", 4, rows);
  ok &= expect(rebuilt->same_function(*builtin_gate("INV0")), "rebuilt table matches catalog");

  std::vector<uint32_t> duplicated = rows;
  duplicated[3] = duplicated[7];
  bool rejected = false;
  try {
    make_gate("INV0", 4, duplicated);
  } catch (const error& e) {
    rejected = e.code() == errc::not_bijective;
  }
  ok &= expect(rejected, "duplicate row rejected as non-bijective");
  return ok;
}

// 2. Enumerating the one-gate adder and subtractor reproduces the published
//    eight-row tables exactly.
bool criterion_tables23() {
  const uint32_t adder_rows[8] = {0b00, 0b10, 0b10, 0b01, 0b10, 0b01, 0b01, 0b11};
  const uint32_t subtractor_rows[8] = {0b00, 0b11, 0b11, 0b01, 0b10, 0b00, 0b00, 0b11};

  bool ok = true;
  const adder_design fa = full_adder();
  const truth_table_view adder =
      enumerate_table(fa.net, {fa.layout.sum_lines[0], fa.layout.carry_out_line});
  ok &= expect(adder.rows.size() == 8, "adder row count");
  for (uint32_t i = 0; i < 8; ++i) {
    ok &= expect(adder.rows[i].first.value() == i, "adder row order");
    ok &= expect(adder.rows[i].second.value() == adder_rows[i],
                 "adder row " + std::to_string(i));
  }

  const adder_design fs = full_subtractor();
  const truth_table_view sub =
      enumerate_table(fs.net, {fs.layout.sum_lines[0], fs.layout.carry_out_line});
  ok &= expect(sub.rows.size() == 8, "subtractor row count");
  for (uint32_t i = 0; i < 8; ++i) {
    ok &= expect(sub.rows[i].second.value() == subtractor_rows[i],
                 "subtractor row " + std::to_string(i));
  }
  return ok;
}

// 3. Both 4-bit ripple designs match integer arithmetic on all 512 cases,
//    in under a second.
bool criterion_exhaustive_arithmetic() {
  const auto start = std::chrono::steady_clock::now();

  const adder_design rca = ripple_carry_adder(4);
  const verify_result add = verify_against_arithmetic(rca.net, rca.layout, arith_mode::add);
  const adder_design rcs = ripple_borrow_subtractor(4);
  const verify_result sub = verify_against_arithmetic(rcs.net, rcs.layout, arith_mode::subtract);

  const auto elapsed = std::chrono::steady_clock::now() - start;
  const double seconds = std::chrono::duration<double>(elapsed).count();

  bool ok = expect(add.ok && add.cases_checked == 512, "adder passes 512/512");
  ok &= expect(sub.ok && sub.cases_checked == 512, "subtractor passes 512/512");
  ok &= expect(seconds < 1.0, "finished in " + std::to_string(seconds) + "s, budget 1s");
  return ok;
}

// 4. The carry-skip adder is functionally the ripple adder and uses exactly
//    the published gate census.
bool criterion_carry_skip() {
  const adder_design csa = carry_skip_adder4();
  const adder_design rca = ripple_carry_adder(4);

  std::vector<uint32_t> csa_outs = csa.layout.sum_lines;
  csa_outs.push_back(csa.layout.carry_out_line);
  std::vector<uint32_t> rca_outs = rca.layout.sum_lines;
  rca_outs.push_back(rca.layout.carry_out_line);
  const equivalence_result equal = check_equivalent(csa.net, csa_outs, rca.net, rca_outs);

  bool ok = expect(equal.equivalent && equal.cases_checked == 512,
                   "carry-skip equals ripple on all 512 inputs");

  std::map<std::string, int> census;
  for (const gate_instance& inst : csa.net.instances()) {
    ++census[inst.g->name()];
  }
  ok &= expect(census["HNG"] == 4 && census["INV0"] == 4 && census["FRG"] == 4 &&
                   census["F2G"] == 1 && csa.net.instances().size() == 13,
               "census is 4 HNG + 4 INV0 + 4 FRG + 1 F2G");
  return ok;
}

// 5. Cost reports reproduce the published totals.
bool criterion_costs() {
  const cost_report fa = compute_cost(full_adder().net);
  bool ok = expect(fa.tlc == tlc_triple{5, 4, 8}, "full adder TLC 5/4/8");

  const cost_report rca = compute_cost(ripple_carry_adder(4).net);
  ok &= expect(rca.gate_count == 4, "rca4 gate count 4");
  ok &= expect(rca.constant_inputs == 4, "rca4 constant inputs 4");
  ok &= expect(rca.garbage_outputs == 8, "rca4 garbage outputs 8");
  ok &= expect(rca.unit_delay == 4, "rca4 unit delay 4");
  ok &= expect(rca.tlc == tlc_triple{20, 16, 32}, "rca4 TLC 20/16/32");

  const cost_report csa = compute_cost(carry_skip_adder4().net);
  ok &= expect(csa.tlc == tlc_triple{50, 40, 40}, "carry-skip TLC 50/40/40");
  return ok;
}

// 6. The ripple scaling laws hold exactly for n = 1..16.
bool criterion_scaling() {
  std::vector<uint32_t> widths(16);
  std::iota(widths.begin(), widths.end(), 1u);
  const std::vector<cost_report> reports = scaling_report(scaled_design::rca, widths);

  bool ok = expect(reports.size() == 16, "report count");
  for (size_t i = 0; i < reports.size(); ++i) {
    const uint64_t n = widths[i];
    ok &= expect(reports[i].gate_count == n && reports[i].constant_inputs == n &&
                     reports[i].garbage_outputs == 2 * n && reports[i].unit_delay == n,
                 "rca" + std::to_string(n) + " counts (n, n, 2n, n)");
  }
  return ok;
}

// 7. Reversibility property suite: forward/backward round trips on 10^4
//    random circuits, exhaustive gate round trips and self-inverse checks,
//    all inside ten seconds.
bool criterion_reversibility() {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;

  std::mt19937 rng(20260808);
  for (int trial = 0; trial < 10000 && ok; ++trial) {
    const circuit c = revnet::test::random_circuit(rng, trial % 4 == 0);
    const assignment inputs = revnet::test::random_inputs(rng, c);
    const assignment outputs = run_forward(c, inputs);
    const assignment recovered = run_backward(c, outputs);
    for (uint32_t line = 0; line < c.line_count(); ++line) {
      const auto constant = c.constants().find(line);
      const bool expected = constant != c.constants().end() ? constant->second : inputs.at(line);
      if (recovered.at(line) != expected) {
        ok = expect(false, "round trip broke at trial " + std::to_string(trial));
        break;
      }
    }
  }

  for (const gate_ref& g : builtin_catalog()) {
    for (uint64_t v = 0; v < (uint64_t{1} << g->arity()); ++v) {
      const bit_word in(g->arity(), v);
      ok &= g->backward(g->forward(in)) == in;
    }
  }
  ok = expect(ok, "exhaustive catalog round trips");

  for (const char* name : {"FG", "F2G", "TG", "FRG"}) {
    const gate_ref g = builtin_gate(name);
    for (uint64_t v = 0; v < (uint64_t{1} << g->arity()); ++v) {
      const bit_word in(g->arity(), v);
      ok &= g->forward(g->forward(in)) == in;
    }
  }
  ok = expect(ok, "self-inverse checks");

  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  ok &= expect(seconds < 10.0, "finished in " + std::to_string(seconds) + "s, budget 10s");
  return ok;
}

// 8. Every generated design survives build -> write -> parse with an
//    identical truth table over all lines.
bool criterion_serialization() {
  bool ok = true;
  const std::vector<std::pair<std::string, adder_design>> designs = [] {
    std::vector<std::pair<std::string, adder_design>> list;
    list.emplace_back("fa", full_adder());
    list.emplace_back("fs", full_subtractor());
    list.emplace_back("rca --bits 4", ripple_carry_adder(4));
    list.emplace_back("rcs --bits 4", ripple_borrow_subtractor(4));
    list.emplace_back("csa4", carry_skip_adder4());
    return list;
  }();

  for (const auto& [args, design] : designs) {
    const std::string file = path_in(design.net.name() + ".rev");
    const run_result built = run_command(cli + " build " + args + " --out " + file);
    ok &= expect(built.exit_code == 0, "build " + args + " succeeds");

    const circuit parsed = parse_netlist(read_file(file), design.net.name());
    std::vector<uint32_t> all_lines(design.net.line_count());
    std::iota(all_lines.begin(), all_lines.end(), 0u);
    const bool same = enumerate_table(parsed, all_lines).rows ==
                      enumerate_table(design.net, all_lines).rows;
    ok &= expect(same, design.net.name() + " truth table identical after the round trip");
  }
  return ok;
}

// 9. Breaking the ripple carry chain at any single stage makes the verify
//    command fail with a concrete counterexample.
bool criterion_mutation() {
  const std::string file = path_in("rca4.rev");
  run_command(cli + " build rca --bits 4 --out " + file);
  const std::string pristine = read_file(file);

  bool ok = true;
  for (uint32_t stage = 0; stage < 4; ++stage) {
    std::ostringstream good, bad;
    good << "gate INV0 " << stage << " " << 4 + stage << " 8 " << 9 + stage;
    bad << "gate INV0 " << stage << " " << 4 + stage << " " << 9 + ((stage + 1) % 4) << " "
        << 9 + stage;

    std::string text = pristine;
    const size_t at = text.find(good.str());
    ok &= expect(at != std::string::npos, "stage " + std::to_string(stage) + " found");
    if (at == std::string::npos) {
      continue;
    }
    text.replace(at, good.str().size(), bad.str());
    const std::string mutated = path_in("rca4_broken.rev");
    write_file(mutated, text);

    const run_result result = run_command(cli + " verify " + mutated + " --mode add");
    ok &= expect(result.exit_code == 1, "stage " + std::to_string(stage) + " exits 1");
    ok &= expect(result.output.find("counterexample:") != std::string::npos,
                 "stage " + std::to_string(stage) + " prints a counterexample");
  }
  return ok;
}

}  // namespace

int main() {
  std::filesystem::remove_all(workdir);
  std::filesystem::create_directories(workdir);

  const std::vector<std::pair<std::string, std::function<bool()>>> criteria = {
      {"INV0 truth table reproduced bit-exact through the CLI", criterion_table1},
      {"full adder and subtractor tables reproduced by enumeration", criterion_tables23},
      {"4-bit ripple adder and subtractor match integer arithmetic (512 cases each)",
       criterion_exhaustive_arithmetic},
      {"carry-skip adder certified equivalent with the exact gate census", criterion_carry_skip},
      {"cost reports reproduce the published totals", criterion_costs},
      {"ripple scaling laws hold for n = 1..16", criterion_scaling},
      {"reversibility property suite (10^4 random circuits + catalog sweeps)",
       criterion_reversibility},
      {"serialization round trip preserves every design bit-exact", criterion_serialization},
      {"single-stage carry-chain mutations are always caught", criterion_mutation},
  };

  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    bool ok = false;
    detail.str("");
    std::string aborted;
    try {
      ok = criteria[i].second();
    } catch (const std::exception& e) {
      aborted = e.what();
    }
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << i + 1 << ". " << criteria[i].first << "\n";
    if (!ok) {
      ++failures;
      if (!aborted.empty()) {
        std::cout << "    aborted: " << aborted << "\n";
      }
      std::cout << detail.str();
    }
  }
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail")
            << "\n";
  return failures;
}
