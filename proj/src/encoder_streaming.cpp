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

#include <string>

#include "hec/coder_high.hpp"
#include "hec/encoder.hpp"
#include "hec/errors.hpp"

namespace hec {

const char *to_string(Core core) noexcept {
  return core == Core::reference ? "reference" : "streaming";
}

void check_encodable(const CoderParams &p) {
  auto require = [](bool ok, const std::string &what) {
    if (!ok) {
      throw ConfigError("cannot encode: " + what);
    }
  };
  require(p.nx >= 1 && p.nx <= limits::nx_max, "nx outside [1, 2^16]");
  require(p.ny >= 1 && p.ny <= limits::ny_max, "ny outside [1, 2^16]");
  require(p.nz >= 1 && p.nz <= limits::nz_max, "nz outside [1, 2^14]");
  require(p.d >= limits::d_min && p.d <= limits::d_max, "d outside [2, 32]");
  require(p.umax >= 1 && p.umax <= limits::umax_max, "umax outside [1, 32]");
  require(p.gamma0 >= 1, "gamma0 below 1");
  require(p.gamma_star > p.gamma0 && p.gamma_star <= limits::gamma_star_max,
          "gamma_star outside [gamma0+1, 11]");
}

namespace stages {

AcssUnit::AcssUnit(const CoderParams &params, std::uint64_t initial_sigma)
    : state_(params, initial_sigma) {}

AcssMessage AcssUnit::process(std::uint64_t delta) {
  AcssMessage msg;
  msg.t = state_.position();
  msg.z = state_.band();
  msg.delta = delta;
  msg.first = msg.t == 0;
  msg.stats = state_.update(delta);
  return msg;
}

HiloMessage HiloUnit::process(const AcssMessage &in) const {
  return {in, !in.first && select_hilo(in.stats.sigma, in.stats.gamma, t0_)};
}

Codeword HighEntropyUnit::process(const HiloMessage &in) const {
  const auto k = compute_k(in.acss.stats.sigma, in.acss.stats.gamma, d_);
  return encode_gpo2(in.acss.delta, k, d_, umax_, CodewordKind::high);
}

LowEntropyUnit::LowEntropyUnit(const CodeTableSet &tables, std::uint32_t d, std::uint32_t umax)
    : tables_(&tables), state_(tables), d_(d), umax_(umax) {}

LowEmission LowEntropyUnit::process(const HiloMessage &in) {
  const auto &stats = in.acss.stats;
  const auto index = select_code_index(stats.sigma, stats.gamma, *tables_);
  const auto symbol = map_input_symbol(in.acss.delta, index.limit);
  return state_.advance(index.index, symbol, in.acss.delta, index.limit, d_, umax_);
}

std::vector<std::optional<Codeword>> LowEntropyUnit::flush() {
  auto words = state_.flush_all();
  std::vector<std::optional<Codeword>> slots(max_code_tables);
  for (std::size_t i = 0; i < words.size(); ++i) {
    slots[i] = words[i];
  }
  return slots;
}

} // namespace stages

EncodeResult encode_streaming(std::span<const std::uint32_t> samples, const CoderParams &params,
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

  stages::AcssUnit acss(params, tables.initial_accumulator());
  const stages::HiloUnit hilo(tables[0].spec.threshold);
  const stages::HighEntropyUnit hiec(params.d, params.umax);
  stages::LowEntropyUnit loec(tables, params.d, params.umax);
  BitSink packer;
  packer.reserve(static_cast<std::size_t>(words_for_bits(samples.size() * std::uint64_t{params.d})));

  EncodeResult result;
  result.params = params;
  result.trace = EmissionTrace(options.keep_trace_entries);
  StageTranscript tr;
  if (options.keep_stage_log) {
    result.stage_log.reserve(samples.size());
  }

  for (const std::uint32_t delta : samples) {
    const AcssMessage a = acss.process(delta);
    ++tr.acss_fires;
    const HiloMessage h = hilo.process(a);
    ++tr.hilo_fires;

    CombinerInput in;
    in.t = a.t;
    in.z = a.z;
    in.delta = a.delta;
    in.d = params.d;
    in.first = a.first;
    in.acss = a.stats;
    in.hilo = h.hilo;
    if (!a.first) {
      if (h.hilo) {
        in.high = hiec.process(h);
        ++tr.hiec_fires;
      } else {
        in.low = loec.process(h);
        ++tr.loec_fires;
      }
    }
    const auto slots = combine(packer, result.trace, in);
    tr.combiner_cycles += slots.cycles;
    tr.combiner_codewords += slots.codewords;
    if (options.keep_stage_log) {
      result.stage_log.push_back({h, in.high, in.low, slots});
    }
  }

  const auto flush_slots = loec.flush();
  tr.tail_flush_slots = flush_slots.size();
  std::vector<Codeword> flush_words;
  for (const auto &slot : flush_slots) {
    if (slot) {
      flush_words.push_back(*slot);
    }
  }
  result.final_sigma = acss.state().drain_final_accumulators();
  result.final_gamma = acss.state().gamma();
  tr.tail_accumulator_slots = result.final_sigma.size();

  result.words = build_tail(packer, result.trace, flush_words, result.final_sigma, params.d,
                            params.gamma_star, params.positions());
  result.total_bits = packer.total_bits();
  tr.packer_words = result.words.size();
  result.transcript = tr;
  return result;
}

EncodeResult encode(Core core, std::span<const std::uint32_t> samples, const CoderParams &params,
                    const CodeTableSet &tables, const EncodeOptions &options) {
  return core == Core::reference ? encode_reference(samples, params, tables, options)
                                 : encode_streaming(samples, params, tables, options);
}

} // namespace hec
