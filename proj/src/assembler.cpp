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

#include "hec/assembler.hpp"

#include <utility>

#include "hec/errors.hpp"

namespace hec {

void BitSink::emit(const Codeword &cw) {
  if (finalized_) {
    throw InternalError("emit after finalize");
  }
  if (!cw.well_formed()) {
    throw InternalError("malformed codeword (length " + std::to_string(cw.length) + ")");
  }
  const std::uint32_t free_bits = 64 - cursor_;
  if (cw.length < free_bits) {
    current_ |= cw.bits << (free_bits - cw.length);
    cursor_ += cw.length;
  } else {
    // Fill the current word with the top `free_bits` bits, carry the rest.
    const std::uint32_t rest = cw.length - free_bits;
    current_ |= rest == 0 ? cw.bits : cw.bits >> rest;
    words_.push_back(current_);
    current_ = rest == 0 ? 0 : cw.bits << (64 - rest);
    cursor_ = rest;
  }
  total_bits_ += cw.length;
}

std::vector<std::uint64_t> BitSink::finalize() {
  if (cursor_ != 0) {
    words_.push_back(current_);
  }
  current_ = 0;
  cursor_ = 0;
  finalized_ = true;
  return std::exchange(words_, {});
}

void EmissionTrace::record(const Codeword &cw, std::uint64_t t, std::uint32_t z) {
  auto &c = counters_;
  switch (cw.kind) {
  case CodewordKind::high:
    ++c.high;
    break;
  case CodewordKind::low:
    ++c.low_match;
    break;
  case CodewordKind::escape_residual:
    ++c.escape;
    break;
  case CodewordKind::rescale_bit:
    ++c.rescale_bits;
    break;
  case CodewordKind::uncompressed:
    ++c.uncompressed;
    break;
  case CodewordKind::flush:
    ++c.flush;
    break;
  case CodewordKind::tail_accumulator:
    ++c.accumulators;
    break;
  }
  ++c.emissions;
  c.total_bits += cw.length;
  if (keep_entries_) {
    entries_.push_back({cw, t, z});
  }
}

std::uint64_t EmissionTrace::entry_bits() const {
  std::uint64_t bits = 0;
  for (const auto &e : entries_) {
    bits += e.codeword.length;
  }
  return bits;
}

CombinerSlots combine(BitSink &sink, EmissionTrace &trace, const CombinerInput &in) {
  CombinerSlots slots{1, 0};
  auto put = [&](const Codeword &cw) {
    sink.emit(cw);
    trace.record(cw, in.t, in.z);
    ++slots.codewords;
  };

  if (in.first) {
    if (in.high || in.low || in.acss.rescaled) {
      throw InternalError("first-sample path with coder output or rescale flag");
    }
    put({in.delta, in.d, CodewordKind::uncompressed});
    return slots;
  }
  if (in.hilo ? (!in.high || in.low) : (in.high || !in.low)) {
    throw InternalError("combiner flags disagree with hilo decision");
  }
  trace.count_decision(in.hilo);

  if (in.acss.rescaled) {
    put({in.acss.rescale_bit & 1U, 1, CodewordKind::rescale_bit});
  }
  if (in.hilo) {
    put(*in.high);
    return slots;
  }
  if (in.low->residual) {
    if (!in.low->matched) {
      throw InternalError("escape residual without a matched codeword");
    }
    put(*in.low->residual);
    ++slots.cycles;
  }
  if (in.low->matched) {
    put(*in.low->matched);
  }
  return slots;
}

std::vector<std::uint64_t> build_tail(BitSink &sink, EmissionTrace &trace,
                                      std::span<const Codeword> flush_words,
                                      std::span<const std::uint64_t> final_accumulators,
                                      std::uint32_t d, std::uint32_t gamma_star,
                                      std::uint64_t tail_position) {
  for (std::size_t i = 0; i < flush_words.size(); ++i) {
    Codeword cw = flush_words[i];
    cw.kind = CodewordKind::flush;
    sink.emit(cw);
    trace.record(cw, tail_position, static_cast<std::uint32_t>(i));
  }
  const std::uint32_t width = 2 + d + gamma_star;
  for (std::size_t z = 0; z < final_accumulators.size(); ++z) {
    const Codeword cw{final_accumulators[z], width, CodewordKind::tail_accumulator};
    if (!cw.well_formed()) {
      throw InternalError("final accumulator exceeds " + std::to_string(width) + " bits");
    }
    sink.emit(cw);
    trace.record(cw, tail_position, static_cast<std::uint32_t>(z));
  }
  return sink.finalize();
}

} // namespace hec
