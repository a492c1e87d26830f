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

#ifndef HEC_ASSEMBLER_HPP
#define HEC_ASSEMBLER_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hec/acss.hpp"
#include "hec/coder_low.hpp"
#include "hec/codeword.hpp"

namespace hec {

/// Packs codewords MSB-first into 64-bit words: the first bit of the stream is
/// bit 63 of word 0.
class BitSink {
public:
  void emit(const Codeword &cw);

  /// Zero-pads the partial word and returns all words. total_bits() keeps its
  /// value; further emits are rejected.
  std::vector<std::uint64_t> finalize();

  [[nodiscard]] std::uint64_t total_bits() const noexcept { return total_bits_; }
  [[nodiscard]] std::uint32_t cursor() const noexcept { return cursor_; }
  [[nodiscard]] const std::vector<std::uint64_t> &completed_words() const noexcept { return words_; }

  void reserve(std::size_t words) { words_.reserve(words); }

private:
  std::vector<std::uint64_t> words_;
  std::uint64_t current_{0};
  std::uint32_t cursor_{0};
  std::uint64_t total_bits_{0};
  bool finalized_{false};
};

struct TraceEntry {
  Codeword codeword;
  std::uint64_t t{0}; // spatial position; positions() for tail entries
  std::uint32_t z{0}; // band, or table index for flush words

  friend bool operator==(const TraceEntry &, const TraceEntry &) = default;
};

struct TraceCounters {
  std::uint64_t high{0};
  std::uint64_t low_match{0};
  std::uint64_t escape{0};
  std::uint64_t rescale_bits{0};
  std::uint64_t uncompressed{0};
  std::uint64_t flush{0};
  std::uint64_t accumulators{0};
  std::uint64_t emissions{0};
  std::uint64_t total_bits{0};
  std::uint64_t high_samples{0}; // hilo = 1 decisions
  std::uint64_t low_samples{0};  // hilo = 0 decisions

  friend bool operator==(const TraceCounters &, const TraceCounters &) = default;
};

/// Ordered record of emitted codewords. Counters are always kept; the entry
/// list only when requested, since it grows with the image.
class EmissionTrace {
public:
  EmissionTrace() = default;
  explicit EmissionTrace(bool keep_entries) : keep_entries_(keep_entries) {}

  void record(const Codeword &cw, std::uint64_t t, std::uint32_t z);
  void count_decision(bool high) noexcept { ++(high ? counters_.high_samples : counters_.low_samples); }

  [[nodiscard]] const TraceCounters &counters() const noexcept { return counters_; }
  [[nodiscard]] const std::vector<TraceEntry> &entries() const noexcept { return entries_; }
  [[nodiscard]] bool keeps_entries() const noexcept { return keep_entries_; }

  /// Σ of codeword lengths over the entry list (requires entries).
  [[nodiscard]] std::uint64_t entry_bits() const;

  friend bool operator==(const EmissionTrace &, const EmissionTrace &) = default;

private:
  bool keep_entries_{true};
  std::vector<TraceEntry> entries_;
  TraceCounters counters_;
};

/// Everything the combiner knows about one sample.
struct CombinerInput {
  std::uint64_t t{0};
  std::uint32_t z{0};
  std::uint64_t delta{0};
  std::uint32_t d{0};
  bool first{false}; // t == 0: emitted uncompressed
  AcssOutput acss;
  bool hilo{false};
  std::optional<Codeword> high;
  std::optional<LowEmission> low;
};

struct CombinerSlots {
  std::uint32_t cycles{0};    // 1, or 2 when an escape residual is forwarded
  std::uint32_t codewords{0}; // codewords handed to the packer
};

/// Emits one sample's codewords: the rescale bit if any, then the
/// uncompressed value (first position), the high codeword, or the escape
/// residual followed by the matched low codeword. Throws InternalError when
/// the flags contradict each other.
CombinerSlots combine(BitSink &sink, EmissionTrace &trace, const CombinerInput &in);

/// Appends the flush words (increasing table index) and the final accumulators
/// as (2+d+γ*)-bit fields in band order, then zero-pads and returns the words.
std::vector<std::uint64_t> build_tail(BitSink &sink, EmissionTrace &trace,
                                      std::span<const Codeword> flush_words,
                                      std::span<const std::uint64_t> final_accumulators,
                                      std::uint32_t d, std::uint32_t gamma_star,
                                      std::uint64_t tail_position);

/// Number of 64-bit words needed for `bits` bits.
constexpr std::uint64_t words_for_bits(std::uint64_t bits) noexcept { return (bits + 63) / 64; }

} // namespace hec

#endif
