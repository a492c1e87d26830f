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

#ifndef HEC_CODER_HIGH_HPP
#define HEC_CODER_HIGH_HPP

#include <cstdint>

#include "hec/codeword.hpp"

namespace hec {

/// High/low decision: true (high-entropy path) iff Σ̃·2^14 <= T_0·Γ.
bool select_hilo(std::uint64_t sigma, std::uint64_t gamma, std::uint64_t t0) noexcept;

/// Largest k <= max(d-2, 2) with Γ·2^k <= Σ̃ + floor(49·Γ / 2^5). Requires Γ >= 1.
std::uint32_t compute_k(std::uint64_t sigma, std::uint64_t gamma, std::uint32_t d);

/// Reverse length-limited GPO2 codeword for `delta` with code index k.
///
/// If floor(delta/2^k) < umax: the k low bits of delta, a one, then
/// floor(delta/2^k) zeros. Otherwise the d-bit binary value of delta followed
/// by umax zeros. Throws ConfigError when delta >= 2^d or k > max(d-2, 2).
Codeword encode_gpo2(std::uint64_t delta, std::uint32_t k, std::uint32_t d, std::uint32_t umax,
                     CodewordKind kind = CodewordKind::high);

inline constexpr std::uint32_t max_code_index(std::uint32_t d) noexcept { return d > 4 ? d - 2 : 2; }

} // namespace hec

#endif
