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

#ifndef HEC_INGEST_HPP
#define HEC_INGEST_HPP

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace hec {

enum class SampleOrder { bip, bil, bsq };
enum class Endian { little, big };

SampleOrder parse_order(const std::string &name);
Endian parse_endian(const std::string &name);
const char *to_string(SampleOrder order) noexcept;

/// Mapped indices in BIP order: z fastest, then x, then y.
struct SampleStream {
  std::uint32_t nx{0};
  std::uint32_t ny{0};
  std::uint32_t nz{0};
  std::vector<std::uint32_t> samples;

  [[nodiscard]] std::size_t index(std::uint32_t x, std::uint32_t y, std::uint32_t z) const noexcept {
    return (static_cast<std::size_t>(y) * nx + x) * nz + z;
  }
};

struct IngestSpec {
  std::filesystem::path path;
  SampleOrder order{SampleOrder::bip};
  Endian endian{Endian::little};
  std::uint32_t bytes_per_sample{0}; // 0 picks the narrowest of 1, 2, 4 holding d bits
  std::uint32_t nx{0};
  std::uint32_t ny{0};
  std::uint32_t nz{0};
  std::uint32_t d{0};
};

std::uint32_t default_bytes_per_sample(std::uint32_t d) noexcept;

/// Reorders a cube stored in `order` into BIP.
std::vector<std::uint32_t> reorder_to_bip(std::span<const std::uint32_t> raw, SampleOrder order,
                                          std::uint32_t nx, std::uint32_t ny, std::uint32_t nz);

/// Reads, decodes and reorders a raw cube. Throws IoError (unreadable file,
/// size mismatch) or ConfigError (sample >= 2^d, sample width too narrow).
SampleStream ingest(const IngestSpec &spec);

/// Decodes raw bytes; `bytes.size()` must be a multiple of bytes_per_sample.
std::vector<std::uint32_t> decode_samples(std::span<const std::uint8_t> bytes, Endian endian,
                                          std::uint32_t bytes_per_sample);

} // namespace hec

#endif
