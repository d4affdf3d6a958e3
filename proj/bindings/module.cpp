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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "revnet/generators.hpp"
#include "revnet/metrics.hpp"
#include "revnet/netlist.hpp"
#include "revnet/simulate.hpp"

namespace py = pybind11;
using namespace revnet;

namespace {

// The catalog hands out shared_ptr<const gate>; pybind holds non-const
// pointers, which is safe here because every gate method is const.
std::shared_ptr<gate> unconst(gate_ref g) { return std::const_pointer_cast<gate>(std::move(g)); }

}  // namespace

PYBIND11_MODULE(revnet, m) {
  m.doc() = "reversible logic netlist toolkit";

  py::register_exception<error>(m, "Error");

  py::class_<bit_word>(m, "BitWord")
      .def(py::init<uint32_t, uint64_t>(), py::arg("width"), py::arg("value"))
      .def_property_readonly("width", &bit_word::width)
      .def_property_readonly("value", &bit_word::value)
      .def("bit", &bit_word::bit, py::arg("pos"))
      .def("__str__", &bit_word::str)
      .def("__repr__", [](const bit_word& w) { return "BitWord('" + w.str() + "')"; })
      .def("__eq__", [](const bit_word& a, const bit_word& b) { return a == b; });

  py::class_<cost_profile>(m, "CostProfile")
      .def_readonly("alpha", &cost_profile::alpha)
      .def_readonly("beta", &cost_profile::beta)
      .def_readonly("delta", &cost_profile::delta)
      .def_readonly("transistor_count", &cost_profile::transistor_count)
      .def_readonly("unit_delay", &cost_profile::unit_delay);

  py::class_<gate, std::shared_ptr<gate>>(m, "Gate")
      .def_property_readonly("name", &gate::name)
      .def_property_readonly("arity", &gate::arity)
      .def_property_readonly("cost", &gate::cost)
      .def("forward", &gate::forward, py::arg("input"))
      .def("forward",
           [](const gate& g, uint64_t value) {
             return g.forward(bit_word(g.arity(), value)).value();
           })
      .def("backward", &gate::backward, py::arg("output"))
      .def("backward",
           [](const gate& g, uint64_t value) {
             return g.backward(bit_word(g.arity(), value)).value();
           })
      .def("truth_table", &gate::truth_table)
      .def("self_inverse", &gate::self_inverse)
      .def("inverted", [](const gate& g) { return unconst(g.inverted()); })
      .def("__repr__", [](const gate& g) { return "Gate(" + g.name() + ")"; });

  m.def(
      "make_gate",
      [](std::string name, uint32_t arity, const std::vector<uint32_t>& mapping) {
        return unconst(make_gate(std::move(name), arity, mapping));
      },
      py::arg("name"), py::arg("arity"), py::arg("mapping"));
  m.def(
      "builtin", [](const std::string& name) { return unconst(builtin_gate(name)); },
      py::arg("name"));
  m.def("catalog", [] {
    std::vector<std::shared_ptr<gate>> gates;
    for (const gate_ref& g : builtin_catalog()) {
      gates.push_back(unconst(g));
    }
    return gates;
  });

  py::class_<violation>(m, "Violation")
      .def_property_readonly("code", [](const violation& v) { return errc_name(v.code); })
      .def_readonly("message", &violation::message)
      .def("__repr__", [](const violation& v) { return v.message; });

  py::class_<circuit>(m, "Circuit")
      .def(py::init<uint32_t, std::string>(), py::arg("line_count"), py::arg("name") = "")
      .def_property_readonly("line_count", &circuit::line_count)
      .def_property_readonly("name", &circuit::name)
      .def("append",
           [](circuit& c, const std::shared_ptr<gate>& g, std::vector<uint32_t> lines) {
             c.append(g, std::move(lines));
           })
      .def("set_constant", &circuit::set_constant, py::arg("line"), py::arg("value"))
      .def("mark_garbage", py::overload_cast<uint32_t>(&circuit::mark_garbage), py::arg("line"))
      .def("label_input", &circuit::label_input, py::arg("line"), py::arg("label"))
      .def("label_output", &circuit::label_output, py::arg("line"), py::arg("label"))
      .def("free_lines", &circuit::free_lines)
      .def("constants", &circuit::constants)
      .def("garbage", [](const circuit& c) { return c.garbage(); })
      .def("input_labels", &circuit::input_labels)
      .def("output_labels", &circuit::output_labels)
      .def("find_input", &circuit::find_input, py::arg("label"))
      .def("find_output", &circuit::find_output, py::arg("label"))
      .def("gate_count", [](const circuit& c) { return c.instances().size(); })
      .def("validate", &circuit::validate)
      .def("inverse", &circuit::inverse)
      .def("depth", &circuit::depth)
      .def("__repr__", [](const circuit& c) {
        return "Circuit(" + (c.name().empty() ? "unnamed" : c.name()) + ", lines=" +
               std::to_string(c.line_count()) + ", gates=" +
               std::to_string(c.instances().size()) + ")";
      });

  m.def("run_forward", &run_forward, py::arg("circuit"), py::arg("inputs"));
  m.def("run_backward", &run_backward, py::arg("circuit"), py::arg("outputs"));

  py::class_<truth_table_view>(m, "TruthTableView")
      .def_readonly("free_input_lines", &truth_table_view::free_input_lines)
      .def_readonly("output_lines", &truth_table_view::output_lines)
      .def_readonly("rows", &truth_table_view::rows);
  m.def("enumerate_table", &enumerate_table, py::arg("circuit"), py::arg("output_lines"));

  py::class_<equivalence_result>(m, "EquivalenceResult")
      .def_readonly("equivalent", &equivalence_result::equivalent)
      .def_readonly("counterexample", &equivalence_result::counterexample)
      .def_readonly("cases_checked", &equivalence_result::cases_checked);
  m.def(
      "check_equivalent",
      [](const circuit& c1, const std::vector<uint32_t>& outs1, const circuit& c2,
         const std::vector<uint32_t>& outs2) { return check_equivalent(c1, outs1, c2, outs2); },
      py::arg("circuit1"), py::arg("outputs1"), py::arg("circuit2"), py::arg("outputs2"));

  py::class_<tlc_triple>(m, "TlcTriple")
      .def_readonly("alpha", &tlc_triple::alpha)
      .def_readonly("beta", &tlc_triple::beta)
      .def_readonly("delta", &tlc_triple::delta)
      .def("__eq__", [](const tlc_triple& a, const tlc_triple& b) { return a == b; })
      .def("__repr__", [](const tlc_triple& t) {
        return "TlcTriple(alpha=" + std::to_string(t.alpha) + ", beta=" + std::to_string(t.beta) +
               ", delta=" + std::to_string(t.delta) + ")";
      });

  py::class_<cost_report>(m, "CostReport")
      .def_readonly("circuit_name", &cost_report::circuit_name)
      .def_readonly("gate_count", &cost_report::gate_count)
      .def_readonly("constant_inputs", &cost_report::constant_inputs)
      .def_readonly("garbage_outputs", &cost_report::garbage_outputs)
      .def_readonly("unit_delay", &cost_report::unit_delay)
      .def_readonly("tlc", &cost_report::tlc)
      .def_readonly("transistor_count", &cost_report::transistor_count);
  m.def("compute_cost", &compute_cost, py::arg("circuit"));

  py::class_<comparison_table>(m, "ComparisonTable")
      .def_property_readonly("rows", &comparison_table::rows)
      .def("is_minimum", &comparison_table::is_minimum, py::arg("row"), py::arg("column"))
      .def("to_text", &comparison_table::to_text)
      .def("to_csv", &comparison_table::to_csv);
  m.def(
      "compare",
      [](const std::vector<cost_report>& reports) { return compare(reports); },
      py::arg("reports"));

  py::enum_<scaled_design>(m, "ScaledDesign")
      .value("RCA", scaled_design::rca)
      .value("RCS", scaled_design::rcs);
  m.def(
      "scaling_report",
      [](scaled_design design, const std::vector<uint32_t>& widths) {
        return scaling_report(design, widths);
      },
      py::arg("design"), py::arg("widths"));

  py::class_<skip_lines>(m, "SkipLines")
      .def_readonly("propagate_lines", &skip_lines::propagate_lines)
      .def_readonly("block_propagate_line", &skip_lines::block_propagate_line)
      .def_readonly("fanout_lines", &skip_lines::fanout_lines);

  py::class_<adder_layout>(m, "AdderLayout")
      .def_readonly("a_lines", &adder_layout::a_lines)
      .def_readonly("b_lines", &adder_layout::b_lines)
      .def_readonly("sum_lines", &adder_layout::sum_lines)
      .def_readonly("ancilla_lines", &adder_layout::ancilla_lines)
      .def_readonly("carry_in_line", &adder_layout::carry_in_line)
      .def_readonly("carry_out_line", &adder_layout::carry_out_line)
      .def_readonly("skip", &adder_layout::skip);

  py::class_<adder_design>(m, "AdderDesign")
      .def_readonly("net", &adder_design::net)
      .def_readonly("layout", &adder_design::layout);

  m.def("full_adder", &full_adder);
  m.def("full_subtractor", &full_subtractor);
  m.def("ripple_carry_adder", &ripple_carry_adder, py::arg("n"));
  m.def("ripple_borrow_subtractor", &ripple_borrow_subtractor, py::arg("n"));
  m.def("carry_skip_adder4", &carry_skip_adder4);

  py::enum_<arith_mode>(m, "ArithMode")
      .value("ADD", arith_mode::add)
      .value("SUBTRACT", arith_mode::subtract);

  py::class_<arith_counterexample>(m, "ArithCounterexample")
      .def_readonly("a", &arith_counterexample::a)
      .def_readonly("b", &arith_counterexample::b)
      .def_readonly("carry_in", &arith_counterexample::carry_in)
      .def_readonly("got_sum", &arith_counterexample::got_sum)
      .def_readonly("got_carry", &arith_counterexample::got_carry)
      .def_readonly("want_sum", &arith_counterexample::want_sum)
      .def_readonly("want_carry", &arith_counterexample::want_carry);

  py::class_<verify_result>(m, "VerifyResult")
      .def_readonly("ok", &verify_result::ok)
      .def_readonly("cases_checked", &verify_result::cases_checked)
      .def_readonly("counterexample", &verify_result::counterexample);
  m.def("verify_against_arithmetic", &verify_against_arithmetic, py::arg("circuit"),
        py::arg("layout"), py::arg("mode"));

  m.def("render_netlist", &render_netlist, py::arg("circuit"));
  m.def("parse_netlist",
        [](const std::string& text, std::string name) {
          return parse_netlist(text, std::move(name));
        },
        py::arg("text"), py::arg("name") = "");
}
