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

#include <map>
#include <string>

#include "hec/coder_high.hpp"
#include "hec/encoder.hpp"
#include "hec/errors.hpp"

namespace hec {

namespace {

using Prefix = std::vector<Symbol>;

std::vector<std::uint64_t> pack_bits(const std::vector<bool> &bits) {
  std::vector<std::uint64_t> words((bits.size() + 63) / 64, 0);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) {
      words[i / 64] |= std::uint64_t{1} << (63 - i % 64);
    }
  }
  return words;
}

} // namespace

EncodeResult encode_reference(std::span<const std::uint32_t> samples, const CoderParams &params,
                              const CodeTableSet &tables, const EncodeOptions &options) {
  check_encodable(params);
  if (tables.empty()) {
    throw TableError("no code tables loaded");
  }
  if (samples.size() != params.samples()) {
    throw ConfigError("sample count " + std::to_string(samples.size()) + " does not match " +
                      std::to_string(params.nx) + "x" + std::to_string(params.ny) + "x" +
                      std::to_string(params.nz));
  }

  const std::uint32_t nz = params.nz;
  const std::uint32_t d = params.d;
  const std::uint64_t positions = params.positions();
  const std::uint64_t saturated = (std::uint64_t{1} << params.gamma_star) - 1;
  const std::uint64_t t0 = tables[0].spec.threshold;

  std::vector<std::map<Prefix, Codeword>> codes(tables.size());
  std::vector<std::map<Prefix, Codeword>> flushes(tables.size());
  for (std::size_t i = 0; i < tables.size(); ++i) {
    for (const auto &e : tables[i].spec.entries) {
      codes[i].emplace(e.input, e.output);
    }
    for (const auto &f : tables[i].spec.flush) {
      flushes[i].emplace(f.prefix, f.word);
    }
  }
  std::vector<Prefix> prefix(tables.size());

  std::vector<std::uint64_t> sigma(nz, tables.initial_accumulator());
  std::uint64_t gamma = std::uint64_t{1} << params.gamma0;

  EncodeResult result;
  result.params = params;
  result.trace = EmissionTrace(options.keep_trace_entries);
  std::vector<bool> bits;

  auto to_bitstream = [&](Codeword cw, CodewordKind kind, std::uint64_t t, std::uint32_t z) {
    cw.kind = kind;
    for (std::uint32_t i = cw.length; i-- > 0;) {
      bits.push_back(((cw.bits >> i) & 1U) != 0);
    }
    result.trace.record(cw, t, z);
  };

  for (std::uint64_t t = 0; t < positions; ++t) {
    if (t == 0) {
      // init(): statistics as initialised above; first sample of every band
      // goes out verbatim.
      for (std::uint32_t z = 0; z < nz; ++z) {
        const std::uint64_t delta = samples[z];
        if (d < 32 && (delta >> d) != 0) {
          throw ConfigError("mapped index " + std::to_string(delta) + " does not fit in d bits");
        }
        to_bitstream({delta, d, CodewordKind::uncompressed}, CodewordKind::uncompressed, t, z);
      }
      continue;
    }

    const std::uint64_t gamma_prev = gamma;
    const bool rescale = gamma_prev == saturated;
    gamma = rescale ? (gamma_prev + 1) / 2 : gamma_prev + 1;

    for (std::uint32_t z = 0; z < nz; ++z) {
      const std::uint64_t delta = samples[static_cast<std::size_t>(t * nz + z)];
      if (d < 32 && (delta >> d) != 0) {
        throw ConfigError("mapped index " + std::to_string(delta) + " does not fit in d bits");
      }

      // update_acss
      const std::uint64_t accumulated = sigma[z] + 4 * delta;
      if (rescale) {
        sigma[z] = (accumulated + 1) / 2;
        to_bitstream({accumulated % 2, 1, CodewordKind::rescale_bit}, CodewordKind::rescale_bit, t, z);
      } else {
        sigma[z] = accumulated;
      }

      // entropy_coder_selection
      const bool hilo = sigma[z] * 16384 <= t0 * gamma;
      result.trace.count_decision(hilo);

      if (hilo) {
        const auto k = compute_k(sigma[z], gamma, d);
        to_bitstream(encode_gpo2(delta, k, d, params.umax), CodewordKind::high, t, z);
        continue;
      }

      const auto index = select_code_index(sigma[z], gamma, tables);
      const auto symbol = map_input_symbol(delta, index.limit);
      const bool escape = symbol == index.limit + 1;
      auto &active = prefix[index.index];
      active.push_back(symbol);
      if (escape) {
        to_bitstream(encode_gpo2(delta - index.limit - 1, 0, d, params.umax),
                     CodewordKind::escape_residual, t, z);
      }
      if (const auto hit = codes[index.index].find(active); hit != codes[index.index].end()) {
        to_bitstream(hit->second, CodewordKind::low, t, z);
        active.clear();
      } else if (escape) {
        throw InternalError("escape did not complete a code in table " +
                            std::to_string(index.index));
      }
    }
  }

  // compressed_image_tail()
  for (std::size_t i = 0; i < tables.size(); ++i) {
    const auto hit = flushes[i].find(prefix[i]);
    if (hit == flushes[i].end()) {
      throw InternalError("no flush word for the active prefix of table " + std::to_string(i));
    }
    to_bitstream(hit->second, CodewordKind::flush, positions, static_cast<std::uint32_t>(i));
  }
  const std::uint32_t width = params.accumulator_bits();
  for (std::uint32_t z = 0; z < nz; ++z) {
    to_bitstream({sigma[z], width, CodewordKind::tail_accumulator}, CodewordKind::tail_accumulator,
                 positions, z);
  }

  result.total_bits = bits.size();
  result.words = pack_bits(bits);
  result.final_sigma = sigma;
  result.final_gamma = gamma;
  return result;
}

} // namespace hec
