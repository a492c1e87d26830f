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

#ifndef HEC_REPORT_HPP
#define HEC_REPORT_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hec/codetables.hpp"
#include "hec/encoder.hpp"
#include "hec/ingest.hpp"
#include "hec/perfmodel.hpp"

namespace hec {

struct Report {
  CoderParams params;
  Core core{Core::streaming};
  std::size_t table_count{0};
  std::uint32_t table_checksum{0};
  std::uint64_t samples{0};
  std::uint64_t total_bits{0};
  std::uint64_t words{0};
  TraceCounters counters;
  RateEstimate predicted;
  std::optional<RateEstimate> audited;
  double encode_seconds{0.0}; // host wall time, informational

  [[nodiscard]] std::uint64_t output_bytes() const noexcept { return words * 8; }
  [[nodiscard]] double bits_per_sample() const noexcept {
    return samples == 0 ? 0.0 : static_cast<double>(total_bits) / static_cast<double>(samples);
  }
};

Report make_report(const EncodeResult &result, const CodeTableSet &tables, Core core,
                   std::uint64_t init_cycles = default_init_cycles, double encode_seconds = 0.0);

/// key=value lines: parameters, table-set checksum, sizes and trace counters.
std::string format_sidecar(const Report &report);

/// The sidecar lines followed by the throughput model block.
std::string format_stats(const Report &report);

/// Writes 64-bit words big-endian. Throws IoError.
void write_bitstream(const std::filesystem::path &path, std::span<const std::uint64_t> words);
std::vector<std::uint64_t> read_bitstream(const std::filesystem::path &path);

void write_text(const std::filesystem::path &path, const std::string &text);

/// `<output>.meta`
std::filesystem::path sidecar_path(const std::filesystem::path &output);

struct FileEncodeOptions {
  SampleOrder order{SampleOrder::bip};
  Endian endian{Endian::little};
  std::uint32_t bytes_per_sample{0};
  Core core{Core::streaming};
  std::uint64_t init_cycles{default_init_cycles};
};

/// Ingests `input`, encodes it, writes the bitstream to `output` and the
/// sidecar next to it. Parameters must pass validate().
Report encode_file(const std::filesystem::path &input, const CoderParams &params,
                   const CodeTableSet &tables, const std::filesystem::path &output,
                   const FileEncodeOptions &options = {});

} // namespace hec

#endif
