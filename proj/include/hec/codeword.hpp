// Copyright 2026 The hec Authors
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

#ifndef HEC_CODEWORD_HPP
#define HEC_CODEWORD_HPP

#include <cstdint>
#include <string>

namespace hec {

enum class CodewordKind : std::uint8_t {
  high,
  low,
  escape_residual,
  rescale_bit,
  uncompressed,
  flush,
  tail_accumulator,
};

const char *to_string(CodewordKind kind) noexcept;

/// A variable-length bit string. The leftmost bit of the written code is the
/// most significant of the `length` low bits of `bits`, and enters the
/// bitstream first.
struct Codeword {
  std::uint64_t bits{0};
  std::uint32_t length{0};
  CodewordKind kind{CodewordKind::low};

  static constexpr std::uint32_t max_length = 64;

  [[nodiscard]] bool well_formed() const noexcept {
    return length >= 1 && length <= max_length && (length == 64 || (bits >> length) == 0);
  }

  // Value and length only; kind is provenance, not content.
  [[nodiscard]] bool same_bits(const Codeword &other) const noexcept {
    return bits == other.bits && length == other.length;
  }

  friend bool operator==(const Codeword &, const Codeword &) = default;
};

/// Formats as the Verilog-style literal used in code-table listings, e.g. 4'hA.
std::string to_verilog(const Codeword &cw);

/// Left-to-right bit string, e.g. "1100".
std::string to_bit_string(const Codeword &cw);

} // namespace hec

#endif
