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

#include "revnet/netlist.hpp"

#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

namespace revnet {

namespace {

[[noreturn]] void render_failed(const circuit& c, const std::string& why) {
  raise(errc::unknown_gate, "cannot serialize circuit '" + c.name() + "': " + why);
}

struct parse_cursor {
  std::string_view text;
  size_t pos = 0;
  uint32_t line_no = 0;

  /// Next non-empty line with comments stripped, tokenized on whitespace.
  std::optional<std::vector<std::string_view>> next_tokens() {
    while (pos < text.size()) {
      size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      std::string_view line = text.substr(pos, end - pos);
      pos = end + 1;
      ++line_no;
      if (const size_t hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      std::vector<std::string_view> tokens;
      size_t i = 0;
      while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
          ++i;
        }
        const size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
          ++i;
        }
        if (i > start) {
          tokens.push_back(line.substr(start, i - start));
        }
      }
      if (!tokens.empty()) {
        return tokens;
      }
    }
    return std::nullopt;
  }
};

[[noreturn]] void fail(uint32_t line_no, const std::string& why) {
  raise(errc::parse_error, "line " + std::to_string(line_no) + ": " + why);
}

uint64_t parse_number(uint32_t line_no, std::string_view token, uint64_t max) {
  uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    fail(line_no, "expected a number, got '" + std::string(token) + "'");
  }
  if (value > max) {
    fail(line_no, "value " + std::to_string(value) + " exceeds " + std::to_string(max));
  }
  return value;
}

}  // namespace

std::string render_netlist(const circuit& c) {
  for (const gate_instance& inst : c.instances()) {
    try {
      if (!builtin_gate(inst.g->name())->same_function(*inst.g)) {
        render_failed(c, "gate '" + inst.g->name() + "' does not match the catalog gate");
      }
    } catch (const error& e) {
      if (e.code() != errc::unknown_gate) {
        throw;
      }
      render_failed(c, "gate '" + inst.g->name() + "' is not a catalog gate");
    }
  }

  std::ostringstream out;
  out << "revnet 1\n";
  out << "lines " << c.line_count() << "\n";
  for (const auto& [line, label] : c.input_labels()) {
    out << "input " << line << " " << label << "\n";
  }
  for (const auto& [line, value] : c.constants()) {
    out << "const " << line << " " << (value ? 1 : 0) << "\n";
  }
  for (const gate_instance& inst : c.instances()) {
    out << "gate " << inst.g->name();
    for (uint32_t line : inst.lines) {
      out << " " << line;
    }
    out << "\n";
  }
  for (const auto& [line, label] : c.output_labels()) {
    out << "output " << line << " " << label << "\n";
  }
  if (!c.garbage().empty()) {
    out << "garbage";
    for (uint32_t line : c.garbage()) {
      out << " " << line;
    }
    out << "\n";
  }
  return out.str();
}

circuit parse_netlist(std::string_view text, std::string name) {
  parse_cursor cursor{text};

  auto magic = cursor.next_tokens();
  if (!magic || (*magic)[0] != "revnet") {
    fail(cursor.line_no ? cursor.line_no : 1, "expected 'revnet 1' header");
  }
  if (magic->size() != 2 || (*magic)[1] != "1") {
    fail(cursor.line_no, "unsupported netlist version");
  }

  auto lines_decl = cursor.next_tokens();
  if (!lines_decl || (*lines_decl)[0] != "lines" || lines_decl->size() != 2) {
    fail(cursor.line_no, "expected 'lines <N>' after the header");
  }
  const uint32_t line_count =
      uint32_t(parse_number(cursor.line_no, (*lines_decl)[1], circuit::max_lines));

  std::optional<circuit> c;
  try {
    c.emplace(line_count, std::move(name));
  } catch (const error& e) {
    fail(cursor.line_no, e.what());
  }

  while (auto tokens = cursor.next_tokens()) {
    const std::string_view directive = (*tokens)[0];
    try {
      if (directive == "gate") {
        if (tokens->size() < 2) {
          fail(cursor.line_no, "gate directive needs a name");
        }
        const gate_ref g = builtin_gate((*tokens)[1]);
        std::vector<uint32_t> lines;
        for (size_t i = 2; i < tokens->size(); ++i) {
          lines.push_back(uint32_t(parse_number(cursor.line_no, (*tokens)[i], circuit::max_lines)));
        }
        c->append(g, std::move(lines));
      } else if (directive == "const") {
        if (tokens->size() != 3) {
          fail(cursor.line_no, "expected 'const <line> <0|1>'");
        }
        const uint32_t line = uint32_t(parse_number(cursor.line_no, (*tokens)[1], circuit::max_lines));
        const uint64_t value = parse_number(cursor.line_no, (*tokens)[2], 1);
        c->set_constant(line, value != 0);
      } else if (directive == "garbage") {
        for (size_t i = 1; i < tokens->size(); ++i) {
          c->mark_garbage(uint32_t(parse_number(cursor.line_no, (*tokens)[i], circuit::max_lines)));
        }
      } else if (directive == "input" || directive == "output") {
        if (tokens->size() != 3) {
          fail(cursor.line_no, "expected '" + std::string(directive) + " <line> <name>'");
        }
        const uint32_t line = uint32_t(parse_number(cursor.line_no, (*tokens)[1], circuit::max_lines));
        if (directive == "input") {
          c->label_input(line, std::string((*tokens)[2]));
        } else {
          c->label_output(line, std::string((*tokens)[2]));
        }
      } else {
        fail(cursor.line_no, "unknown directive '" + std::string(directive) + "'");
      }
    } catch (const error& e) {
      if (e.code() == errc::parse_error) {
        throw;
      }
      fail(cursor.line_no, e.what());
    }
  }
  return *std::move(c);
}

}  // namespace revnet
