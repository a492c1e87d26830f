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

#include "hec/ingest.hpp"

#include <fstream>
#include <iterator>

#include "hec/errors.hpp"

namespace hec {

SampleOrder parse_order(const std::string &name) {
  if (name == "bip") {
    return SampleOrder::bip;
  }
  if (name == "bil") {
    return SampleOrder::bil;
  }
  if (name == "bsq") {
    return SampleOrder::bsq;
  }
  throw ConfigError("unknown sample order '" + name + "' (bip, bil, bsq)");
}

Endian parse_endian(const std::string &name) {
  if (name == "little" || name == "le") {
    return Endian::little;
  }
  if (name == "big" || name == "be") {
    return Endian::big;
  }
  throw ConfigError("unknown endianness '" + name + "' (little, big)");
}

const char *to_string(SampleOrder order) noexcept {
  switch (order) {
  case SampleOrder::bip:
    return "bip";
  case SampleOrder::bil:
    return "bil";
  case SampleOrder::bsq:
    return "bsq";
  }
  return "?";
}

std::uint32_t default_bytes_per_sample(std::uint32_t d) noexcept {
  return d <= 8 ? 1 : d <= 16 ? 2 : 4;
}

std::vector<std::uint32_t> reorder_to_bip(std::span<const std::uint32_t> raw, SampleOrder order,
                                          std::uint32_t nx, std::uint32_t ny, std::uint32_t nz) {
  const std::size_t plane = static_cast<std::size_t>(nx) * ny;
  if (raw.size() != plane * nz) {
    throw ConfigError("cube size does not match dimensions");
  }
  if (order == SampleOrder::bip) {
    return {raw.begin(), raw.end()};
  }
  std::vector<std::uint32_t> out(raw.size());
  std::size_t dst = 0;
  for (std::uint32_t y = 0; y < ny; ++y) {
    for (std::uint32_t x = 0; x < nx; ++x) {
      for (std::uint32_t z = 0; z < nz; ++z) {
        const std::size_t src = order == SampleOrder::bsq
                                    ? z * plane + static_cast<std::size_t>(y) * nx + x
                                    : (static_cast<std::size_t>(y) * nz + z) * nx + x;
        out[dst++] = raw[src];
      }
    }
  }
  return out;
}

std::vector<std::uint32_t> decode_samples(std::span<const std::uint8_t> bytes, Endian endian,
                                          std::uint32_t bytes_per_sample) {
  if (bytes_per_sample != 1 && bytes_per_sample != 2 && bytes_per_sample != 4) {
    throw ConfigError("bytes per sample must be 1, 2 or 4");
  }
  if (bytes.size() % bytes_per_sample != 0) {
    throw IoError("byte count is not a multiple of the sample width");
  }
  std::vector<std::uint32_t> out(bytes.size() / bytes_per_sample);
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::uint32_t v = 0;
    for (std::uint32_t b = 0; b < bytes_per_sample; ++b) {
      const std::uint32_t byte = bytes[i * bytes_per_sample + b];
      const std::uint32_t shift = endian == Endian::little ? 8 * b : 8 * (bytes_per_sample - 1 - b);
      v |= byte << shift;
    }
    out[i] = v;
  }
  return out;
}

SampleStream ingest(const IngestSpec &spec) {
  const std::uint32_t bps =
      spec.bytes_per_sample == 0 ? default_bytes_per_sample(spec.d) : spec.bytes_per_sample;
  if (bps * 8 < spec.d) {
    throw ConfigError(std::to_string(bps) + "-byte samples cannot hold d=" + std::to_string(spec.d) +
                      " bits");
  }
  std::ifstream in(spec.path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open input " + spec.path.string());
  }
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) {
    throw IoError("error reading " + spec.path.string());
  }
  const std::uint64_t expected = std::uint64_t{spec.nx} * spec.ny * spec.nz * bps;
  if (bytes.size() != expected) {
    throw IoError(spec.path.string() + " holds " + std::to_string(bytes.size()) + " bytes, expected " +
                  std::to_string(expected) + " (" + std::to_string(spec.nx) + "x" +
                  std::to_string(spec.ny) + "x" + std::to_string(spec.nz) + "x" +
                  std::to_string(bps) + ")");
  }
  auto raw = decode_samples(bytes, spec.endian, bps);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (spec.d < 32 && (raw[i] >> spec.d) != 0) {
      throw ConfigError("sample " + std::to_string(i) + " = " + std::to_string(raw[i]) +
                        " does not fit in d=" + std::to_string(spec.d) + " bits");
    }
  }
  return {spec.nx, spec.ny, spec.nz, reorder_to_bip(raw, spec.order, spec.nx, spec.ny, spec.nz)};
}

} // namespace hec
