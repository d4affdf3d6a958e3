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

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "revnet/bitword.hpp"

namespace revnet {

/// Logic-operation counts behind the TLC circuit-cost measure, plus
/// transistor metadata carried verbatim from the source designs.
struct cost_profile {
  uint32_t alpha = 0;  ///< 2-input XOR count
  uint32_t beta = 0;   ///< 2-input AND count
  uint32_t delta = 0;  ///< NOT count
  std::optional<uint32_t> transistor_count;  ///< metadata only, never computed with
  uint32_t unit_delay = 1;
};

class gate;
using gate_ref = std::shared_ptr<const gate>;

/// A reversible gate: a named permutation of {0,1}^arity with cost metadata.
///
/// Immutable after construction; instances are shared by reference and are
/// safe to read concurrently.
class gate {
public:
  static constexpr uint32_t max_arity = 8;

  const std::string& name() const { return name_; }
  uint32_t arity() const { return arity_; }
  const cost_profile& cost() const { return cost_; }

  bit_word forward(bit_word input) const;
  bit_word backward(bit_word output) const;

  std::span<const uint32_t> mapping() const { return mapping_; }
  std::span<const uint32_t> inverse_mapping() const { return inverse_; }

  bool self_inverse() const { return mapping_ == inverse_; }

  /// Same permutation, ignoring name and cost.
  bool same_function(const gate& other) const {
    return arity_ == other.arity_ && mapping_ == other.mapping_;
  }

  /// The gate computing the inverse permutation. Self-inverse gates keep
  /// their name; otherwise a '~' suffix is toggled so inverting twice
  /// restores the original name.
  gate_ref inverted() const;

  /// All 2^arity (input, output) rows in ascending input order.
  std::vector<std::pair<bit_word, bit_word>> truth_table() const;

private:
  gate(std::string name, uint32_t arity, std::vector<uint32_t> mapping,
       std::vector<uint32_t> inverse, cost_profile cost)
      : name_(std::move(name)),
        arity_(arity),
        mapping_(std::move(mapping)),
        inverse_(std::move(inverse)),
        cost_(cost) {}

  friend gate_ref make_gate(std::string name, uint32_t arity,
                            std::span<const uint32_t> mapping, cost_profile cost);

  std::string name_;
  uint32_t arity_;
  std::vector<uint32_t> mapping_;
  std::vector<uint32_t> inverse_;
  cost_profile cost_;
};

/// Validates that `mapping` is a permutation of {0..2^arity-1} and builds the
/// gate with its inverse precomputed. Rejects non-bijections, naming the two
/// colliding input words.
gate_ref make_gate(std::string name, uint32_t arity, std::span<const uint32_t> mapping,
                   cost_profile cost = {});

/// Catalog gate by name. Known names: FG, F2G, FRG, TG, HNG, INV0.
gate_ref builtin_gate(std::string_view name);

/// The gate catalog in listing order.
std::span<const gate_ref> builtin_catalog();

}  // namespace revnet
