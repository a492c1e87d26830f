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

#include "hec/coder_high.hpp"

#include "hec/errors.hpp"

namespace hec {

bool select_hilo(std::uint64_t sigma, std::uint64_t gamma, std::uint64_t t0) noexcept {
  return (sigma << 14) <= t0 * gamma;
}

std::uint32_t compute_k(std::uint64_t sigma, std::uint64_t gamma, std::uint32_t d) {
  if (gamma == 0) {
    throw InternalError("compute_k with zero counter");
  }
  const std::uint64_t bound = sigma + ((49 * gamma) >> 5);
  const std::uint32_t cap = max_code_index(d);
  // k = 0 always qualifies because floor(49Γ/32) >= Γ.
  std::uint32_t k = 0;
  while (k < cap && (gamma << (k + 1)) <= bound) {
    ++k;
  }
  return k;
}

Codeword encode_gpo2(std::uint64_t delta, std::uint32_t k, std::uint32_t d, std::uint32_t umax,
                     CodewordKind kind) {
  if (d < 64 && (delta >> d) != 0) {
    throw ConfigError("value " + std::to_string(delta) + " does not fit in d=" + std::to_string(d) +
                      " bits");
  }
  if (k > max_code_index(d)) {
    throw ConfigError("code index " + std::to_string(k) + " above max(d-2, 2)");
  }
  const std::uint64_t unary = delta >> k;
  Codeword cw;
  cw.kind = kind;
  if (unary < umax) {
    const std::uint64_t low_bits = delta & ((std::uint64_t{1} << k) - 1);
    const auto zeros = static_cast<std::uint32_t>(unary);
    cw.length = k + 1 + zeros;
    cw.bits = (((low_bits << 1) | 1U) << zeros);
  } else {
    cw.length = d + umax;
    cw.bits = delta << umax;
  }
  return cw;
}

} // namespace hec
