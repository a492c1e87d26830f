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

#include "hec/perfmodel.hpp"

#include <string>

#include "hec/errors.hpp"

namespace hec {

Throughput loop_throughput(const LoopSpec &spec) {
  if (spec.n == 0 || spec.k == 0) {
    throw ConfigError("loop needs n >= 1 and k >= 1");
  }
  if (spec.k > spec.m) {
    return {1, 1};
  }
  return {spec.n, std::uint64_t{spec.m} + spec.n};
}

RateEstimate predict_rate(const CoderParams &params, std::uint64_t escape_count,
                          std::uint64_t init_cycles) {
  return {init_cycles, params.samples(), tail_flush_cycles + params.nz, escape_count};
}

RateEstimate audit_rate(const EncodeResult &result, std::uint64_t init_cycles) {
  if (!result.transcript) {
    throw InternalError("rate audit needs a streaming-core stage transcript");
  }
  const auto &tr = *result.transcript;
  // Combiner cycles are one per sample plus one per forwarded escape residual.
  if (tr.combiner_cycles < tr.acss_fires) {
    throw InternalError("combiner fired fewer cycles than samples");
  }
  RateEstimate audited{init_cycles, tr.acss_fires, tr.tail_flush_slots + tr.tail_accumulator_slots,
                       tr.combiner_cycles - tr.acss_fires};
  const auto predicted = predict_rate(result.params, result.escape_count(), init_cycles);
  if (audited.cycles() != predicted.cycles()) {
    throw InternalError("audited cycle count " + std::to_string(audited.cycles()) +
                        " differs from predicted " + std::to_string(predicted.cycles()));
  }
  return audited;
}

} // namespace hec
