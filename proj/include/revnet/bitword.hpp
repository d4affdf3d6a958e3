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

#include <cstdint>
#include <string>

#include "revnet/errors.hpp"

namespace revnet {

/// A fixed-width word of line values.
///
/// Position 0 holds the first gate line (A) and is the *most significant*
/// bit of value(), so ascending integer order equals truth-table row order.
class bit_word {
public:
  static constexpr uint32_t max_width = 63;

  bit_word() = default;
  bit_word(uint32_t width, uint64_t value);

  uint32_t width() const { return width_; }
  uint64_t value() const { return value_; }

  bool bit(uint32_t pos) const;
  void set_bit(uint32_t pos, bool value);

  /// Bits in position order, e.g. "1101" for (A,B,C,D) = (1,1,0,1).
  std::string str() const;

  friend bool operator==(const bit_word&, const bit_word&) = default;

private:
  uint32_t width_ = 0;
  uint64_t value_ = 0;
};

}  // namespace revnet
