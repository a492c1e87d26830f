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

#ifndef HEC_PERFMODEL_HPP
#define HEC_PERFMODEL_HPP

#include <cstdint>

#include "hec/config.hpp"
#include "hec/encoder.hpp"

namespace hec {

/// Cycles assumed for pipeline fill and header generation. A model constant,
/// passed explicitly everywhere it matters.
inline constexpr std::uint64_t default_init_cycles = 10;

/// One cycle per flush-table slot in the image tail.
inline constexpr std::uint64_t tail_flush_cycles = max_code_tables;

/// A feedback loop y(t) = alpha·x(t) + y(t-k) with m feed-forward pipeline
/// registers and n feedback delay registers.
struct LoopSpec {
  std::uint32_t m{0};
  std::uint32_t n{1};
  std::uint32_t k{1};
  double alpha{1.0}; // documentation only
};

/// Exact ratio samples/cycles.
struct Throughput {
  std::uint64_t samples{1};
  std::uint64_t cycles{1};

  [[nodiscard]] double value() const noexcept {
    return static_cast<double>(samples) / static_cast<double>(cycles);
  }
};

/// 1 sample/cycle when the dependency distance k exceeds the feed-forward depth
/// m; otherwise the loop controller stalls and delivers n/(m+n).
/// Throws ConfigError when n or k is zero.
Throughput loop_throughput(const LoopSpec &spec);

struct RateEstimate {
  std::uint64_t init_cycles{0};
  std::uint64_t sample_count{0};
  std::uint64_t tail_cycles{0};
  std::uint64_t escape_cycles{0};

  [[nodiscard]] std::uint64_t cycles() const noexcept {
    return init_cycles + sample_count + tail_cycles + escape_cycles;
  }
  [[nodiscard]] double samples_per_cycle() const noexcept {
    return static_cast<double>(sample_count) / static_cast<double>(cycles());
  }

  friend bool operator==(const RateEstimate &, const RateEstimate &) = default;
};

/// N/(init + N + 16 + nz + escapes), N = nx·ny·nz.
RateEstimate predict_rate(const CoderParams &params, std::uint64_t escape_count,
                          std::uint64_t init_cycles = default_init_cycles);

/// Cycle count rebuilt from the streaming core's stage transcript. Throws
/// InternalError if the result carries no transcript or the count disagrees
/// with predict_rate for the same escape count.
RateEstimate audit_rate(const EncodeResult &result, std::uint64_t init_cycles = default_init_cycles);

} // namespace hec

#endif
