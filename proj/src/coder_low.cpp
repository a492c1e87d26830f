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

#include "hec/coder_low.hpp"

#include "hec/coder_high.hpp"
#include "hec/errors.hpp"

namespace hec {

CodeIndex select_code_index(std::uint64_t sigma, std::uint64_t gamma, const CodeTableSet &tables) {
  const std::uint64_t scaled = sigma << 14;
  std::optional<std::uint32_t> best;
  for (std::uint32_t i = 0; i < tables.size(); ++i) {
    if (scaled <= tables[i].spec.threshold * gamma) {
      best = i;
    }
  }
  if (!best) {
    if (tables.full()) {
      throw InternalError("no low-entropy code index qualifies for sigma=" + std::to_string(sigma) +
                          " gamma=" + std::to_string(gamma));
    }
    best = 0;
  }
  return {*best, tables[*best].spec.limit};
}

LowCoderState::LowCoderState(const CodeTableSet &tables) : tables_(&tables) {
  for (std::size_t i = 0; i < tables.size(); ++i) {
    address_[i] = tables[i].rom.root;
  }
}

bool LowCoderState::at_root(std::size_t table) const {
  return address_.at(table) == (*tables_)[table].rom.root;
}

LowEmission LowCoderState::advance(std::uint32_t i, Symbol symbol, std::uint64_t delta,
                                   std::uint32_t limit, std::uint32_t d, std::uint32_t umax) {
  const auto &rom = (*tables_)[i].rom;
  const auto step = lookup_step(rom, address_[i], symbol);
  address_[i] = step.next_address;
  LowEmission out;
  if (symbol == limit + 1) {
    if (!step.matched) {
      throw InternalError("escape symbol did not complete a code in table " + std::to_string(i));
    }
    out.residual = encode_gpo2(delta - limit - 1, 0, d, umax, CodewordKind::escape_residual);
  }
  if (step.matched) {
    out.matched = step.output;
    out.matched->kind = CodewordKind::low;
  }
  return out;
}

std::vector<Codeword> LowCoderState::flush_all() {
  std::vector<Codeword> out;
  out.reserve(tables_->size());
  for (std::size_t i = 0; i < tables_->size(); ++i) {
    const auto &rom = (*tables_)[i].rom;
    out.push_back(flush_word(rom, address_[i]));
    address_[i] = rom.root;
  }
  return out;
}

} // namespace hec
