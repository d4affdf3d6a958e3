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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "revnet/generators.hpp"
#include "revnet/metrics.hpp"
#include "revnet/netlist.hpp"
#include "revnet/simulate.hpp"

using namespace revnet;

namespace {

// Exit codes: 0 success, 1 verification failure, 2 usage or domain error,
// 3 netlist parse error.
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;

[[noreturn]] void usage_error(const std::string& message) {
  raise(errc::value_out_of_range, message);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    usage_error("cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

circuit load_circuit(const std::string& path) {
  return parse_netlist(read_file(path), std::filesystem::path(path).stem().string());
}

// ---- assignment parsing ---------------------------------------------------

uint64_t parse_value(const std::string& text) {
  size_t consumed = 0;
  uint64_t value = 0;
  try {
    if (text.rfind("0x", 0) == 0 || text.rfind("0X", 0) == 0) {
      value = std::stoull(text.substr(2), &consumed, 16);
      consumed += 2;
    } else {
      value = std::stoull(text, &consumed, 10);
    }
  } catch (const std::exception&) {
    usage_error("cannot parse value '" + text + "'");
  }
  if (consumed != text.size()) {
    usage_error("cannot parse value '" + text + "'");
  }
  return value;
}

bool parse_bit(const std::string& text, const std::string& what) {
  if (text == "0") {
    return false;
  }
  if (text == "1") {
    return true;
  }
  usage_error(what + " takes a single bit, got '" + text + "'");
}

/// Lines of the operand group <prefix>0, <prefix>1, ... in bit order, or an
/// empty list when no such labels exist.
std::vector<uint32_t> label_group(const std::map<uint32_t, std::string>& labels,
                                  const std::string& prefix) {
  std::map<uint64_t, uint32_t> by_index;
  for (const auto& [line, label] : labels) {
    if (label.size() <= prefix.size() || label.compare(0, prefix.size(), prefix) != 0) {
      continue;
    }
    const std::string suffix = label.substr(prefix.size());
    if (suffix.find_first_not_of("0123456789") != std::string::npos) {
      continue;
    }
    by_index[std::stoull(suffix)] = line;
  }
  std::vector<uint32_t> lines;
  for (uint64_t i = 0; i < by_index.size(); ++i) {
    const auto it = by_index.find(i);
    if (it == by_index.end()) {
      return {};  // not contiguous from 0; not an operand group
    }
    lines.push_back(it->second);
  }
  return lines;
}

void assign_line(assignment& values, uint32_t line, bool bit, const std::string& name) {
  if (values.count(line)) {
    usage_error("'" + name + "' assigns line " + std::to_string(line) + " twice");
  }
  values[line] = bit;
}

/// Parses NAME=bit, NAME=integer (expanded LSB-first over NAME0..NAMEk-1)
/// and line:<idx>=bit forms. Forward assignments resolve names against the
/// input labels; backward assignments try the output labels first.
assignment parse_assignment(const circuit& c, const std::vector<std::string>& tokens,
                            bool backward) {
  assignment values;
  for (const std::string& token : tokens) {
    std::stringstream pieces(token);
    std::string piece;
    while (std::getline(pieces, piece, ',')) {
      if (piece.empty()) {
        continue;
      }
      const size_t eq = piece.find('=');
      if (eq == std::string::npos) {
        usage_error("expected NAME=VALUE, got '" + piece + "'");
      }
      const std::string name = piece.substr(0, eq);
      const std::string value = piece.substr(eq + 1);

      if (name.rfind("line:", 0) == 0) {
        const uint64_t line = parse_value(name.substr(5));
        if (line >= c.line_count()) {
          usage_error("line " + std::to_string(line) + " out of range");
        }
        assign_line(values, uint32_t(line), parse_bit(value, name), name);
        continue;
      }

      const auto& primary = backward ? c.output_labels() : c.input_labels();
      const auto& fallback = backward ? c.input_labels() : c.output_labels();

      std::optional<uint32_t> exact;
      for (const auto& [line, label] : primary) {
        if (label == name) {
          exact = line;
        }
      }
      if (!exact && backward) {
        for (const auto& [line, label] : fallback) {
          if (label == name) {
            exact = line;
          }
        }
      }
      if (exact) {
        assign_line(values, *exact, parse_bit(value, name), name);
        continue;
      }

      std::vector<uint32_t> group = label_group(primary, name);
      if (group.empty() && backward) {
        group = label_group(fallback, name);
      }
      if (group.empty()) {
        raise(errc::unexpected_input, "unknown " + std::string(backward ? "output" : "input") +
                                          " name '" + name + "'");
      }
      const uint64_t packed = parse_value(value);
      if (group.size() < 64 && packed >> group.size() != 0) {
        usage_error("value " + value + " does not fit in the " + std::to_string(group.size()) +
                    "-bit operand '" + name + "'");
      }
      for (size_t i = 0; i < group.size(); ++i) {
        assign_line(values, group[i], (packed >> i) & 1u, name);
      }
    }
  }
  return values;
}

// ---- layout recovery from labels ------------------------------------------

adder_layout derive_layout(const circuit& c, arith_mode mode) {
  const bool add = mode == arith_mode::add;
  adder_layout layout;
  layout.a_lines = label_group(c.input_labels(), "A");
  layout.b_lines = label_group(c.input_labels(), "B");
  layout.sum_lines = label_group(c.output_labels(), add ? "SUM" : "DIFF");
  std::optional<uint32_t> cin = c.find_input(add ? "CIN" : "BIN");
  std::optional<uint32_t> cout = c.find_output(add ? "COUT" : "BOUT");

  if (layout.a_lines.empty()) {
    // Single-bit designs label their ports A, B, C and SUM/DIFF.
    const auto a = c.find_input("A");
    const auto b = c.find_input("B");
    const auto sum = c.find_output(add ? "SUM" : "DIFF");
    if (a && b && sum) {
      layout.a_lines = {*a};
      layout.b_lines = {*b};
      layout.sum_lines = {*sum};
      cin = c.find_input("C");
      cout = c.find_output(add ? "CARRY" : "BORROW");
    }
  }

  if (layout.a_lines.empty() || layout.a_lines.size() != layout.b_lines.size() ||
      layout.sum_lines.size() != layout.a_lines.size() || !cin || !cout) {
    raise(errc::input_shape_mismatch,
          std::string("cannot derive an arithmetic layout: the netlist needs ") +
              (add ? "A0../B0../CIN inputs and SUM0../COUT outputs"
                   : "A0../B0../BIN inputs and DIFF0../BOUT outputs"));
  }
  layout.carry_in_line = *cin;
  layout.carry_out_line = *cout;
  return layout;
}

// ---- subcommand implementations -------------------------------------------

void print_gate_table(const gate_ref& g) {
  static constexpr const char* in_names = "ABCDEFGH";
  static constexpr const char* out_names = "PQRSTUVW";
  std::string header;
  for (uint32_t i = 0; i < g->arity(); ++i) {
    header += in_names[i];
    header += ' ';
  }
  header += '|';
  for (uint32_t i = 0; i < g->arity(); ++i) {
    header += ' ';
    header += out_names[i];
  }
  std::cout << header << "\n";
  for (const auto& [in, out] : g->truth_table()) {
    std::string row;
    for (uint32_t i = 0; i < in.width(); ++i) {
      row += in.bit(i) ? '1' : '0';
      row += ' ';
    }
    row += '|';
    for (uint32_t i = 0; i < out.width(); ++i) {
      row += ' ';
      row += out.bit(i) ? '1' : '0';
    }
    std::cout << row << "\n";
  }
}

int run_gates(const std::string& name) {
  if (!name.empty()) {
    print_gate_table(builtin_gate(name));
    return 0;
  }
  std::cout << "name  arity  alpha  beta  delta  transistors\n";
  for (const gate_ref& g : builtin_catalog()) {
    const cost_profile& cost = g->cost();
    char row[96];
    std::snprintf(row, sizeof(row), "%-4s  %5u  %5u  %4u  %5u  %11s", g->name().c_str(),
                  g->arity(), cost.alpha, cost.beta, cost.delta,
                  cost.transistor_count ? std::to_string(*cost.transistor_count).c_str() : "-");
    std::cout << row << "\n";
  }
  return 0;
}

void print_report(const cost_report& report) {
  std::cout << "design: " << report.circuit_name << "\n";
  std::cout << "gates: " << report.gate_count << "\n";
  std::cout << "constant inputs: " << report.constant_inputs << "\n";
  std::cout << "garbage outputs: " << report.garbage_outputs << "\n";
  std::cout << "unit delay: " << report.unit_delay << "\n";
  std::cout << "tlc: alpha=" << report.tlc.alpha << " beta=" << report.tlc.beta
            << " delta=" << report.tlc.delta << "\n";
  std::cout << "transistors: ";
  if (report.transistor_count) {
    std::cout << *report.transistor_count;
  } else {
    std::cout << "-";
  }
  std::cout << "\n";
}

int run_build(const std::string& design, std::optional<uint32_t> bits, std::string out_path) {
  adder_design built = [&] {
    if (design == "rca" || design == "rcs") {
      if (!bits) {
        usage_error("design '" + design + "' requires --bits");
      }
      return design == "rca" ? ripple_carry_adder(*bits) : ripple_borrow_subtractor(*bits);
    }
    if (bits) {
      usage_error("design '" + design + "' does not take --bits");
    }
    if (design == "fa") {
      return full_adder();
    }
    if (design == "fs") {
      return full_subtractor();
    }
    return carry_skip_adder4();
  }();

  if (out_path.empty()) {
    out_path = built.net.name() + ".rev";
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    usage_error("cannot write '" + out_path + "'");
  }
  out << render_netlist(built.net);
  out.close();

  print_report(compute_cost(built.net));
  std::cout << "wrote: " << out_path << "\n";
  return 0;
}

int run_simulate(const std::string& path, const std::vector<std::string>& inputs, bool backward) {
  const circuit c = load_circuit(path);
  const assignment given = parse_assignment(c, inputs, backward);
  const assignment result = backward ? run_backward(c, given) : run_forward(c, given);
  const auto& labels = backward ? c.input_labels() : c.output_labels();
  for (uint32_t line = 0; line < c.line_count(); ++line) {
    const auto label = labels.find(line);
    std::cout << "line " << line << " " << (label != labels.end() ? label->second : "-") << " "
              << (result.at(line) ? 1 : 0) << "\n";
  }
  return 0;
}

int run_table(const std::string& path, const std::string& outputs) {
  const circuit c = load_circuit(path);

  std::vector<uint32_t> selection;
  std::vector<std::string> names;
  std::stringstream pieces(outputs);
  std::string piece;
  while (std::getline(pieces, piece, ',')) {
    if (piece.empty()) {
      continue;
    }
    if (piece.rfind("line:", 0) == 0) {
      const uint64_t line = parse_value(piece.substr(5));
      if (line >= c.line_count()) {
        usage_error("line " + std::to_string(line) + " out of range");
      }
      selection.push_back(uint32_t(line));
    } else if (const auto line = c.find_output(piece)) {
      selection.push_back(*line);
    } else {
      raise(errc::missing_output, "unknown output '" + piece + "'");
    }
    names.push_back(piece);
  }
  if (selection.empty()) {
    usage_error("--outputs selects nothing");
  }

  const truth_table_view view = enumerate_table(c, selection);
  std::string header;
  for (uint32_t line : view.free_input_lines) {
    const auto label = c.input_labels().find(line);
    header += label != c.input_labels().end() ? label->second : "line:" + std::to_string(line);
    header += ' ';
  }
  header += '|';
  for (const std::string& name : names) {
    header += ' ';
    header += name;
  }
  std::cout << header << "\n";
  for (const auto& [in, out] : view.rows) {
    std::string row;
    for (uint32_t i = 0; i < in.width(); ++i) {
      row += in.bit(i) ? '1' : '0';
      row += ' ';
    }
    row += '|';
    for (uint32_t i = 0; i < out.width(); ++i) {
      row += ' ';
      row += out.bit(i) ? '1' : '0';
    }
    std::cout << row << "\n";
  }
  return 0;
}

std::vector<uint32_t> labeled_output_lines(const circuit& c) {
  std::vector<uint32_t> lines;
  for (const auto& [line, label] : c.output_labels()) {
    lines.push_back(line);
  }
  return lines;
}

int run_verify(const std::string& path, const std::string& mode, const std::string& against) {
  const circuit c = load_circuit(path);

  if (mode == "equiv") {
    if (against.empty()) {
      usage_error("--mode equiv requires --against");
    }
    const circuit other = load_circuit(against);
    const std::vector<uint32_t> outs1 = labeled_output_lines(c);
    const std::vector<uint32_t> outs2 = labeled_output_lines(other);
    const equivalence_result result = check_equivalent(c, outs1, other, outs2);
    if (result.equivalent) {
      std::cout << result.cases_checked << "/" << result.cases_checked << " cases pass\n";
      return 0;
    }
    std::cout << "counterexample:";
    const std::vector<uint32_t> free = c.free_lines();
    for (uint32_t pos = 0; pos < free.size(); ++pos) {
      const auto label = c.input_labels().find(free[pos]);
      std::cout << " "
                << (label != c.input_labels().end() ? label->second
                                                    : "line:" + std::to_string(free[pos]))
                << "=" << (result.counterexample->bit(pos) ? 1 : 0);
    }
    std::cout << "\n";
    return kExitVerifyFail;
  }

  if (!against.empty()) {
    usage_error("--against only applies to --mode equiv");
  }
  const arith_mode arith = mode == "add" ? arith_mode::add : arith_mode::subtract;
  const adder_layout layout = derive_layout(c, arith);
  const verify_result result = verify_against_arithmetic(c, layout, arith);
  if (result.ok) {
    std::cout << result.cases_checked << "/" << result.cases_checked << " cases pass\n";
    return 0;
  }
  const arith_counterexample& cx = *result.counterexample;
  const bool add = arith == arith_mode::add;
  std::cout << "counterexample: A=" << cx.a << " B=" << cx.b << (add ? " Cin=" : " Bin=")
            << (cx.carry_in ? 1 : 0) << "\n";
  std::cout << "  got:  " << (add ? "sum=" : "diff=") << cx.got_sum
            << (add ? " cout=" : " bout=") << (cx.got_carry ? 1 : 0) << "\n";
  std::cout << "  want: " << (add ? "sum=" : "diff=") << cx.want_sum
            << (add ? " cout=" : " bout=") << (cx.want_carry ? 1 : 0) << "\n";
  return kExitVerifyFail;
}

int run_metrics(const std::vector<std::string>& files, bool csv) {
  if (files.empty()) {
    raise(errc::empty_input, "no netlist files given");
  }
  std::vector<cost_report> reports;
  reports.reserve(files.size());
  for (const std::string& file : files) {
    reports.push_back(compute_cost(load_circuit(file)));
  }
  const comparison_table table = compare(reports);
  std::cout << (csv ? table.to_csv() : table.to_text());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reversible logic netlist toolkit"};
  app.require_subcommand(1);

  std::string gate_name;
  CLI::App* gates = app.add_subcommand("gates", "list the gate catalog or print a truth table");
  gates->add_option("name", gate_name, "gate to print");

  std::string design;
  std::optional<uint32_t> bits;
  std::string out_path;
  CLI::App* build = app.add_subcommand("build", "generate a design and write its netlist");
  build->add_option("design", design, "one of fa, fs, rca, rcs, csa4")
      ->required()
      ->check(CLI::IsMember({"fa", "fs", "rca", "rcs", "csa4"}));
  build->add_option("--bits", bits, "operand width for rca/rcs");
  build->add_option("--out", out_path, "output file (default <design>.rev)");

  std::string sim_file;
  std::vector<std::string> sim_inputs;
  bool backward = false;
  CLI::App* simulate = app.add_subcommand("simulate", "run a netlist on an assignment");
  simulate->add_option("file", sim_file, "netlist file")->required();
  simulate->add_option("--inputs", sim_inputs, "NAME=bit, NAME=integer or line:<idx>=bit pairs")
      ->required();
  simulate->add_flag("--backward", backward, "apply the inverse circuit to all-line outputs");

  std::string table_file;
  std::string table_outputs;
  CLI::App* table = app.add_subcommand("table", "print a truth table over selected outputs");
  table->add_option("file", table_file, "netlist file")->required();
  table->add_option("--outputs", table_outputs, "comma-separated output labels or line:<idx>")
      ->required();

  std::string verify_file;
  std::string verify_mode;
  std::string verify_against;
  CLI::App* verify = app.add_subcommand("verify", "check a netlist exhaustively");
  verify->add_option("file", verify_file, "netlist file")->required();
  verify->add_option("--mode", verify_mode, "add, subtract or equiv")
      ->required()
      ->check(CLI::IsMember({"add", "subtract", "equiv"}));
  verify->add_option("--against", verify_against, "reference netlist for --mode equiv");

  std::vector<std::string> metric_files;
  bool csv = false;
  CLI::App* metrics = app.add_subcommand("metrics", "compare cost reports of netlists");
  metrics->add_option("files", metric_files, "netlist files");
  metrics->add_flag("--csv", csv, "emit comma-separated values");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (gates->parsed()) {
      return run_gates(gate_name);
    }
    if (build->parsed()) {
      return run_build(design, bits, out_path);
    }
    if (simulate->parsed()) {
      return run_simulate(sim_file, sim_inputs, backward);
    }
    if (table->parsed()) {
      return run_table(table_file, table_outputs);
    }
    if (verify->parsed()) {
      return run_verify(verify_file, verify_mode, verify_against);
    }
    if (metrics->parsed()) {
      return run_metrics(metric_files, csv);
    }
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == errc::parse_error ? kExitParse : kExitUsage;
  }
  return 0;
}
