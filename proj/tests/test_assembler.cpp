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

#include <gtest/gtest.h>

#include "hec/assembler.hpp"
#include "hec/errors.hpp"
#include "support.hpp"

using hec::BitSink;
using hec::Codeword;
using hec::CodewordKind;

namespace {

Codeword bits(const std::string &s, CodewordKind kind = CodewordKind::high) {
  Codeword cw{0, static_cast<std::uint32_t>(s.size()), kind};
  for (const char c : s) {
    cw.bits = (cw.bits << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return cw;
}

std::string stream_of(const std::vector<std::uint64_t> &words, std::uint64_t total) {
  std::string out;
  for (std::uint64_t i = 0; i < total; ++i) {
    out += ((words[i / 64] >> (63 - i % 64)) & 1U) != 0 ? '1' : '0';
  }
  return out;
}

} // namespace

TEST(BitSink, SingleBit) {
  BitSink sink;
  sink.emit(bits("1"));
  const auto words = sink.finalize();
  ASSERT_EQ(words.size(), 1U);
  EXPECT_EQ(words[0], std::uint64_t{1} << 63);
  EXPECT_EQ(sink.total_bits(), 1U);
}

TEST(BitSink, TwoHalvesFillOneWord) {
  BitSink sink;
  sink.emit({0xDEADBEEF, 32, CodewordKind::high});
  sink.emit({0x01234567, 32, CodewordKind::high});
  EXPECT_EQ(sink.cursor(), 0U);
  ASSERT_EQ(sink.completed_words().size(), 1U);
  EXPECT_EQ(sink.completed_words()[0], 0xDEADBEEF01234567ULL);
  EXPECT_EQ(sink.finalize().size(), 1U);
}

TEST(BitSink, EmptyFinalize) {
  BitSink sink;
  EXPECT_TRUE(sink.finalize().empty());
  EXPECT_EQ(sink.total_bits(), 0U);
}

TEST(BitSink, RejectsBadInput) {
  BitSink sink;
  EXPECT_THROW(sink.emit({0, 0, CodewordKind::high}), hec::InternalError);
  EXPECT_THROW(sink.emit({4, 2, CodewordKind::high}), hec::InternalError);
  (void)sink.finalize();
  EXPECT_THROW(sink.emit(bits("1")), hec::InternalError);
}

TEST(BitSink, MatchesStringPacker) {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 200; ++round) {
    BitSink sink;
    std::string expect;
    const int n = static_cast<int>(rng() % 300);
    for (int i = 0; i < n; ++i) {
      const auto len = static_cast<std::uint32_t>(1 + rng() % 64);
      Codeword cw{len == 64 ? rng() : rng() & ((std::uint64_t{1} << len) - 1), len, CodewordKind::low};
      sink.emit(cw);
      expect += oracle::bits_of(cw.bits, cw.length);
      ASSERT_EQ(sink.total_bits(), 64 * sink.completed_words().size() + sink.cursor());
    }
    const auto words = sink.finalize();
    EXPECT_EQ(sink.total_bits(), expect.size());
    EXPECT_EQ(words.size(), hec::words_for_bits(expect.size()));
    EXPECT_EQ(words, oracle::pack(expect));
  }
}

TEST(Combine, FirstSampleUncompressed) {
  BitSink sink;
  hec::EmissionTrace trace;
  hec::CombinerInput in;
  in.d = 4;
  in.delta = 5;
  in.first = true;
  const auto slots = hec::combine(sink, trace, in);
  EXPECT_EQ(slots.cycles, 1U);
  EXPECT_EQ(slots.codewords, 1U);
  const auto words = sink.finalize();
  EXPECT_EQ(stream_of(words, 4), "0101");
  EXPECT_EQ(trace.counters().uncompressed, 1U);
  EXPECT_EQ(trace.counters().high_samples + trace.counters().low_samples, 0U);
}

TEST(Combine, RescaleBitPrecedesHighCodeword) {
  BitSink sink;
  hec::EmissionTrace trace;
  hec::CombinerInput in;
  in.t = 3;
  in.d = 8;
  in.acss = {7, 32, true, 1};
  in.hilo = true;
  in.high = bits("11");
  (void)hec::combine(sink, trace, in);
  EXPECT_EQ(stream_of(sink.finalize(), 3), "111");
  ASSERT_EQ(trace.entries().size(), 2U);
  EXPECT_EQ(trace.entries()[0].codeword.kind, CodewordKind::rescale_bit);
  EXPECT_EQ(trace.entries()[1].codeword.kind, CodewordKind::high);
  EXPECT_EQ(trace.counters().high_samples, 1U);

  BitSink zero;
  hec::EmissionTrace t2;
  in.acss.rescale_bit = 0;
  (void)hec::combine(zero, t2, in);
  EXPECT_EQ(stream_of(zero.finalize(), 3), "011");
}

TEST(Combine, LowPrefixExtensionEmitsNothing) {
  BitSink sink;
  hec::EmissionTrace trace;
  hec::CombinerInput in;
  in.t = 1;
  in.d = 8;
  in.low = hec::LowEmission{};
  const auto slots = hec::combine(sink, trace, in);
  EXPECT_EQ(slots.codewords, 0U);
  EXPECT_EQ(slots.cycles, 1U);
  EXPECT_EQ(sink.total_bits(), 0U);
  EXPECT_EQ(trace.counters().low_samples, 1U);
}

TEST(Combine, EscapeResidualBeforeMatch) {
  BitSink sink;
  hec::EmissionTrace trace;
  hec::CombinerInput in;
  in.t = 1;
  in.d = 8;
  in.low = hec::LowEmission{bits("1000", CodewordKind::escape_residual), bits("01011", CodewordKind::low)};
  const auto slots = hec::combine(sink, trace, in);
  EXPECT_EQ(slots.cycles, 2U);
  EXPECT_EQ(slots.codewords, 2U);
  EXPECT_EQ(stream_of(sink.finalize(), 9), "100001011");
  ASSERT_EQ(trace.entries().size(), 2U);
  EXPECT_EQ(trace.entries()[0].codeword.kind, CodewordKind::escape_residual);
  EXPECT_EQ(trace.counters().escape, 1U);
  EXPECT_EQ(trace.counters().low_match, 1U);
}

TEST(Combine, ConflictingFlags) {
  BitSink sink;
  hec::EmissionTrace trace;
  hec::CombinerInput in;
  in.t = 1;
  in.d = 8;
  in.hilo = true;
  EXPECT_THROW((void)hec::combine(sink, trace, in), hec::InternalError); // no high codeword
  in.high = bits("1");
  in.low = hec::LowEmission{};
  EXPECT_THROW((void)hec::combine(sink, trace, in), hec::InternalError);
  in.first = true;
  EXPECT_THROW((void)hec::combine(sink, trace, in), hec::InternalError);
  in = {};
  in.t = 1;
  in.d = 8;
  in.low = hec::LowEmission{bits("1", CodewordKind::escape_residual), std::nullopt};
  EXPECT_THROW((void)hec::combine(sink, trace, in), hec::InternalError);
}

TEST(BuildTail, FlushThenAccumulators) {
  BitSink sink;
  hec::EmissionTrace trace;
  const std::vector<Codeword> flush{bits("0", CodewordKind::flush)};
  const std::vector<std::uint64_t> accs{5, 6, 7};
  const auto words = hec::build_tail(sink, trace, flush, accs, 4, 6, 99);
  // 1 flush bit + 3 × 12-bit fields.
  EXPECT_EQ(sink.total_bits(), 1U + 36U);
  EXPECT_EQ(stream_of(words, 37), "0" + oracle::bits_of(5, 12) + oracle::bits_of(6, 12) + oracle::bits_of(7, 12));
  EXPECT_EQ(words.size(), 1U);
  EXPECT_EQ(words[0] & ((std::uint64_t{1} << 27) - 1), 0U); // zero padding
  EXPECT_EQ(trace.counters().flush, 1U);
  EXPECT_EQ(trace.counters().accumulators, 3U);
  EXPECT_EQ(trace.entry_bits(), sink.total_bits());
  for (const auto &e : trace.entries()) {
    EXPECT_EQ(e.t, 99U);
  }
}

TEST(BuildTail, RejectsOversizedAccumulator) {
  BitSink sink;
  hec::EmissionTrace trace;
  const std::vector<std::uint64_t> accs{std::uint64_t{1} << 12};
  EXPECT_THROW((void)hec::build_tail(sink, trace, {}, accs, 4, 6, 0), hec::InternalError);
}

TEST(EmissionTrace, CountersWithoutEntries) {
  hec::EmissionTrace lean(false);
  hec::EmissionTrace full;
  for (const auto kind : {CodewordKind::high, CodewordKind::low, CodewordKind::escape_residual,
                          CodewordKind::rescale_bit, CodewordKind::uncompressed, CodewordKind::flush,
                          CodewordKind::tail_accumulator}) {
    lean.record(bits("101", kind), 0, 0);
    full.record(bits("101", kind), 0, 0);
  }
  EXPECT_TRUE(lean.entries().empty());
  EXPECT_EQ(full.entries().size(), 7U);
  EXPECT_EQ(lean.counters(), full.counters());
  EXPECT_EQ(lean.counters().total_bits, 21U);
  EXPECT_EQ(lean.counters().emissions, 7U);
}
