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

#include "hec/codeword.hpp"

#include <cstdio>

namespace hec {

const char *to_string(CodewordKind kind) noexcept {
  switch (kind) {
  case CodewordKind::high:
    return "high";
  case CodewordKind::low:
    return "low";
  case CodewordKind::escape_residual:
    return "escape";
  case CodewordKind::rescale_bit:
    return "rescale";
  case CodewordKind::uncompressed:
    return "uncompressed";
  case CodewordKind::flush:
    return "flush";
  case CodewordKind::tail_accumulator:
    return "accumulator";
  }
  return "?";
}

std::string to_verilog(const Codeword &cw) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%u'h%llX", cw.length, static_cast<unsigned long long>(cw.bits));
  return buf;
}

std::string to_bit_string(const Codeword &cw) {
  std::string out;
  out.reserve(cw.length);
  for (std::uint32_t i = cw.length; i-- > 0;) {
    out.push_back(((cw.bits >> i) & 1U) != 0 ? '1' : '0');
  }
  return out;
}

} // namespace hec
