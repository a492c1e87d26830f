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

#ifndef HEC_CODER_LOW_HPP
#define HEC_CODER_LOW_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "hec/codetables.hpp"
#include "hec/codeword.hpp"

namespace hec {

struct CodeIndex {
  std::uint32_t index{0};
  std::uint32_t limit{0};
};

/// Largest i with Σ̃·2^14 <= T_i·Γ over the loaded tables; every comparison is
/// evaluated. With a reduced (fixture) set an empty result clamps to table 0;
/// with all 16 tables loaded it throws InternalError.
CodeIndex select_code_index(std::uint64_t sigma, std::uint64_t gamma, const CodeTableSet &tables);

/// δ when δ <= L, otherwise the escape symbol L+1.
inline Symbol map_input_symbol(std::uint64_t delta, std::uint32_t limit) noexcept {
  return delta <= limit ? static_cast<Symbol>(delta) : limit + 1;
}

struct LowEmission {
  std::optional<Codeword> residual; // k=0 GPO2 codeword of δ-L-1, on escape
  std::optional<Codeword> matched;
  [[nodiscard]] bool match() const noexcept { return matched.has_value(); }
};

/// CT_ADDRESS register file: current ROM block base per code table.
class LowCoderState {
public:
  explicit LowCoderState(const CodeTableSet &tables);

  [[nodiscard]] std::uint32_t address(std::size_t table) const { return address_.at(table); }
  [[nodiscard]] bool at_root(std::size_t table) const;

  /// One ROM lookup for table i: read address, add symbol, look up, write back.
  LowEmission advance(std::uint32_t i, Symbol symbol, std::uint64_t delta, std::uint32_t limit,
                      std::uint32_t d, std::uint32_t umax);

  /// Flush words of every loaded table in increasing index, then resets all
  /// addresses to their roots.
  std::vector<Codeword> flush_all();

private:
  const CodeTableSet *tables_;
  std::array<std::uint32_t, max_code_tables> address_{};
};

} // namespace hec

#endif
