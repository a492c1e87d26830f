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

#ifndef HEC_ENCODER_HPP
#define HEC_ENCODER_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hec/acss.hpp"
#include "hec/assembler.hpp"
#include "hec/codetables.hpp"
#include "hec/coder_low.hpp"
#include "hec/config.hpp"

namespace hec {

enum class Core { reference, streaming };

const char *to_string(Core core) noexcept;

struct EncodeOptions {
  bool keep_trace_entries{true};
  bool keep_stage_log{false}; // streaming core only; one record per sample
};

/// Per-stage firing counts of the streaming core. One combiner cycle is spent
/// per sample plus one per escape residual; the tail walks all 16 flush-table
/// slots whether or not a table is loaded, then nz accumulator slots.
struct StageTranscript {
  std::uint64_t acss_fires{0};
  std::uint64_t hilo_fires{0};
  std::uint64_t hiec_fires{0};
  std::uint64_t loec_fires{0};
  std::uint64_t combiner_cycles{0};
  std::uint64_t combiner_codewords{0};
  std::uint64_t packer_words{0};
  std::uint64_t tail_flush_slots{0};
  std::uint64_t tail_accumulator_slots{0};

  friend bool operator==(const StageTranscript &, const StageTranscript &) = default;
};

// Inter-stage messages of the streaming core.
struct AcssMessage {
  std::uint64_t t{0};
  std::uint32_t z{0};
  std::uint64_t delta{0};
  bool first{false};
  AcssOutput stats;
};

struct HiloMessage {
  AcssMessage acss;
  bool hilo{false};
};

struct StageRecord {
  HiloMessage decision;
  std::optional<Codeword> high;
  std::optional<LowEmission> low;
  CombinerSlots slots;
};

struct EncodeResult {
  CoderParams params;
  std::vector<std::uint64_t> words;
  std::uint64_t total_bits{0};
  EmissionTrace trace;
  std::vector<std::uint64_t> final_sigma; // per band, as drained for the tail
  std::uint64_t final_gamma{0};
  std::optional<StageTranscript> transcript; // streaming core only
  std::vector<StageRecord> stage_log;

  [[nodiscard]] std::uint64_t samples() const noexcept { return params.samples(); }
  [[nodiscard]] std::uint64_t escape_count() const noexcept { return trace.counters().escape; }
};

/// Direct transcription of the coding procedure: per-band accumulator array,
/// scalar counter, raw symbol prefixes matched against each table's entry
/// list, and a bit-vector output packed at the end.
EncodeResult encode_reference(std::span<const std::uint32_t> samples, const CoderParams &params,
                              const CodeTableSet &tables, const EncodeOptions &options = {});

/// Pipeline-unit core: ACSS -> HiLo -> {HiEC, LoEC} -> Combiner -> Packer,
/// using the statistics queue and the compiled code-table ROMs.
EncodeResult encode_streaming(std::span<const std::uint32_t> samples, const CoderParams &params,
                              const CodeTableSet &tables, const EncodeOptions &options = {});

EncodeResult encode(Core core, std::span<const std::uint32_t> samples, const CoderParams &params,
                    const CodeTableSet &tables, const EncodeOptions &options = {});

/// Structural requirements of the encoder cores (looser than validate(): any
/// positive dimensions are accepted). Throws ConfigError.
void check_encodable(const CoderParams &params);

namespace stages {

class AcssUnit {
public:
  AcssUnit(const CoderParams &params, std::uint64_t initial_sigma);
  AcssMessage process(std::uint64_t delta);
  [[nodiscard]] const AcssState &state() const noexcept { return state_; }

private:
  AcssState state_;
};

class HiloUnit {
public:
  explicit HiloUnit(std::uint64_t t0) : t0_(t0) {}
  [[nodiscard]] HiloMessage process(const AcssMessage &in) const;

private:
  std::uint64_t t0_;
};

class HighEntropyUnit {
public:
  HighEntropyUnit(std::uint32_t d, std::uint32_t umax) : d_(d), umax_(umax) {}
  [[nodiscard]] Codeword process(const HiloMessage &in) const;

private:
  std::uint32_t d_;
  std::uint32_t umax_;
};

class LowEntropyUnit {
public:
  LowEntropyUnit(const CodeTableSet &tables, std::uint32_t d, std::uint32_t umax);
  LowEmission process(const HiloMessage &in);
  /// One entry per table slot (16); slots with no loaded table are empty.
  std::vector<std::optional<Codeword>> flush();
  [[nodiscard]] const LowCoderState &state() const noexcept { return state_; }

private:
  const CodeTableSet *tables_;
  LowCoderState state_;
  std::uint32_t d_;
  std::uint32_t umax_;
};

} // namespace stages

} // namespace hec

#endif
