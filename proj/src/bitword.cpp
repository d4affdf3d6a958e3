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

#include "revnet/bitword.hpp"

namespace revnet {

bit_word::bit_word(uint32_t width, uint64_t value) : width_(width), value_(value) {
  if (width > max_width) {
    raise(errc::width_out_of_range,
          "bit word width " + std::to_string(width) + " exceeds " + std::to_string(max_width));
  }
  if (value >> width != 0) {
    raise(errc::value_out_of_range,
          "value " + std::to_string(value) + " does not fit in " + std::to_string(width) + " bits");
  }
}

bool bit_word::bit(uint32_t pos) const {
  if (pos >= width_) {
    raise(errc::value_out_of_range, "bit position " + std::to_string(pos) + " out of range");
  }
  return (value_ >> (width_ - 1 - pos)) & 1u;
}

void bit_word::set_bit(uint32_t pos, bool value) {
  if (pos >= width_) {
    raise(errc::value_out_of_range, "bit position " + std::to_string(pos) + " out of range");
  }
  const uint64_t mask = uint64_t{1} << (width_ - 1 - pos);
  value_ = value ? (value_ | mask) : (value_ & ~mask);
}

std::string bit_word::str() const {
  std::string out;
  out.reserve(width_);
  for (uint32_t pos = 0; pos < width_; ++pos) {
    out.push_back(bit(pos) ? '1' : '0');
  }
  return out;
}

}  // namespace revnet
