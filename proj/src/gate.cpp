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

#include "revnet/gate.hpp"

#include <array>
#include <functional>

namespace revnet {

namespace {

std::string word_str(uint32_t arity, uint32_t value) {
  return bit_word(arity, value).str();
}

}  // namespace

bit_word gate::forward(bit_word input) const {
  if (input.width() != arity_) {
    raise(errc::width_mismatch, "gate " + name_ + " expects " + std::to_string(arity_) +
                                    " lines, got " + std::to_string(input.width()));
  }
  return bit_word(arity_, mapping_[input.value()]);
}

bit_word gate::backward(bit_word output) const {
  if (output.width() != arity_) {
    raise(errc::width_mismatch, "gate " + name_ + " expects " + std::to_string(arity_) +
                                    " lines, got " + std::to_string(output.width()));
  }
  return bit_word(arity_, inverse_[output.value()]);
}

gate_ref gate::inverted() const {
  std::string name = name_;
  if (!self_inverse()) {
    if (name.size() > 1 && name.back() == '~') {
      name.pop_back();
    } else {
      name += '~';
    }
  }
  return gate_ref(new gate(std::move(name), arity_, inverse_, mapping_, cost_));
}

std::vector<std::pair<bit_word, bit_word>> gate::truth_table() const {
  std::vector<std::pair<bit_word, bit_word>> rows;
  rows.reserve(mapping_.size());
  for (uint32_t in = 0; in < mapping_.size(); ++in) {
    rows.emplace_back(bit_word(arity_, in), bit_word(arity_, mapping_[in]));
  }
  return rows;
}

gate_ref make_gate(std::string name, uint32_t arity, std::span<const uint32_t> mapping,
                   cost_profile cost) {
  if (arity < 1 || arity > gate::max_arity) {
    raise(errc::width_out_of_range,
          "gate arity must be in 1.." + std::to_string(gate::max_arity) + ", got " +
              std::to_string(arity));
  }
  const size_t rows = size_t{1} << arity;
  if (mapping.size() != rows) {
    raise(errc::length_mismatch, "gate " + name + ": expected " + std::to_string(rows) +
                                     " mapping rows, got " + std::to_string(mapping.size()));
  }
  // first_input[w] remembers which input produced output word w
  std::vector<int32_t> first_input(rows, -1);
  for (uint32_t in = 0; in < rows; ++in) {
    const uint32_t out = mapping[in];
    if (out >= rows) {
      raise(errc::value_out_of_range, "gate " + name + ": output word " + std::to_string(out) +
                                          " for input " + word_str(arity, in) +
                                          " exceeds the " + std::to_string(arity) + "-line range");
    }
    if (first_input[out] >= 0) {
      raise(errc::not_bijective,
            "gate " + name + ": inputs " + word_str(arity, uint32_t(first_input[out])) + " and " +
                word_str(arity, in) + " both map to " + word_str(arity, out));
    }
    first_input[out] = int32_t(in);
  }
  std::vector<uint32_t> forward(mapping.begin(), mapping.end());
  std::vector<uint32_t> inverse(rows);
  for (uint32_t in = 0; in < rows; ++in) {
    inverse[forward[in]] = in;
  }
  return gate_ref(new gate(std::move(name), arity, std::move(forward), std::move(inverse), cost));
}

namespace {

// Builds a mapping by evaluating output expressions over the input lines;
// in[0] is the gate's A line.
template <uint32_t Arity, typename Fn>
gate_ref expression_gate(std::string name, Fn&& fn, cost_profile cost) {
  std::vector<uint32_t> mapping(size_t{1} << Arity);
  for (uint32_t word = 0; word < mapping.size(); ++word) {
    std::array<bool, Arity> in{};
    for (uint32_t pos = 0; pos < Arity; ++pos) {
      in[pos] = (word >> (Arity - 1 - pos)) & 1u;
    }
    std::array<bool, Arity> out = fn(in);
    uint32_t packed = 0;
    for (uint32_t pos = 0; pos < Arity; ++pos) {
      packed |= uint32_t(out[pos]) << (Arity - 1 - pos);
    }
    mapping[word] = packed;
  }
  return make_gate(std::move(name), Arity, mapping, cost);
}

std::vector<gate_ref> build_catalog() {
  std::vector<gate_ref> catalog;

  // Feynman gate: (A, B) -> (A, A^B)
  catalog.push_back(expression_gate<2>(
      "FG",
      [](std::array<bool, 2> v) {
        return std::array<bool, 2>{v[0], v[0] != v[1]};
      },
      cost_profile{.alpha = 1, .beta = 0, .delta = 0, .transistor_count = 8}));

  // Double Feynman gate: (A, B, C) -> (A, A^B, A^C)
  catalog.push_back(expression_gate<3>(
      "F2G",
      [](std::array<bool, 3> v) {
        return std::array<bool, 3>{v[0], v[0] != v[1], v[0] != v[2]};
      },
      cost_profile{.alpha = 2, .beta = 0, .delta = 0, .transistor_count = std::nullopt}));

  // Fredkin gate: (A, B, C) -> (A, A'B + AC, AB + A'C), a controlled swap
  catalog.push_back(expression_gate<3>(
      "FRG",
      [](std::array<bool, 3> v) {
        const bool a = v[0], b = v[1], c = v[2];
        return std::array<bool, 3>{a, a ? c : b, a ? b : c};
      },
      cost_profile{.alpha = 2, .beta = 4, .delta = 2, .transistor_count = 4}));

  // Toffoli gate: (A, B, C) -> (A, B, AB ^ C)
  catalog.push_back(expression_gate<3>(
      "TG",
      [](std::array<bool, 3> v) {
        return std::array<bool, 3>{v[0], v[1], (v[0] && v[1]) != v[2]};
      },
      cost_profile{.alpha = 1, .beta = 1, .delta = 0, .transistor_count = 6}));

  // HNG gate: (A, B, C, D) -> (A, B, A^B^C, (A^B)C ^ AB ^ D)
  catalog.push_back(expression_gate<4>(
      "HNG",
      [](std::array<bool, 4> v) {
        const bool a = v[0], b = v[1], c = v[2], d = v[3];
        const bool p = a != b;
        return std::array<bool, 4>{a, b, p != c, ((p && c) != (a && b)) != d};
      },
      cost_profile{.alpha = 5, .beta = 2, .delta = 0, .transistor_count = std::nullopt}));

  // Inventive0 gate, stored row for row as published. Equivalent closed
  // forms (checked exhaustively in the tests):
  //   P = C, Q = A^B^C, R = AB ^ (A^B)C ^ D, S = A'B ^ (A xnor B)C ^ D'
  static constexpr std::array<uint32_t, 16> inv0_rows = {
      1, 2, 12, 15, 4, 7, 10, 9, 5, 6, 11, 8, 3, 0, 14, 13};
  catalog.push_back(make_gate("INV0", 4, inv0_rows,
                              cost_profile{.alpha = 5, .beta = 4, .delta = 8, .transistor_count = std::nullopt}));

  return catalog;
}

}  // namespace

std::span<const gate_ref> builtin_catalog() {
  static const std::vector<gate_ref> catalog = build_catalog();
  return catalog;
}

gate_ref builtin_gate(std::string_view name) {
  for (const gate_ref& g : builtin_catalog()) {
    if (g->name() == name) {
      return g;
    }
  }
  raise(errc::unknown_gate, "unknown gate '" + std::string(name) + "'");
}

}  // namespace revnet
