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

#ifndef HEC_CODETABLES_HPP
#define HEC_CODETABLES_HPP

#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "hec/codeword.hpp"

namespace hec {

/// Input symbol of a low-entropy code. For a table with symbol limit L the
/// legal symbols are 0..L, and L+1 stands for the escape symbol X.
using Symbol = std::uint32_t;

inline constexpr std::size_t max_code_tables = 16;

struct CodeEntry {
  std::vector<Symbol> input;
  Codeword output;
};

struct FlushEntry {
  std::vector<Symbol> prefix; // empty = the null sequence
  Codeword word;
};

struct CodeTableSpec {
  std::uint32_t index{0};
  std::uint64_t threshold{0}; // T_i
  std::uint32_t limit{0};     // L_i
  std::vector<CodeEntry> entries;
  std::vector<FlushEntry> flush;

  [[nodiscard]] Symbol escape() const noexcept { return limit + 1; }
  [[nodiscard]] std::uint32_t symbol_count() const noexcept { return limit + 2; }
};

/// Prefix trie of a code table. Node 0 is the root (the null sequence).
/// Terminal nodes carry an output codeword; every other node carries the
/// flush word of its prefix and one child per legal symbol.
class CodeTrie {
public:
  static constexpr std::int32_t no_child = -1;

  struct Node {
    std::optional<Codeword> output;
    std::optional<Codeword> flush;
    std::vector<std::int32_t> children; // indexed by symbol; empty on terminals
    std::uint32_t depth{0};
  };

  [[nodiscard]] const std::vector<Node> &nodes() const noexcept { return nodes_; }
  [[nodiscard]] const Node &root() const noexcept { return nodes_.front(); }
  [[nodiscard]] std::uint32_t symbol_count() const noexcept { return symbol_count_; }
  [[nodiscard]] std::size_t terminal_count() const noexcept;

  /// Node reached by walking `path` from the root, if any.
  [[nodiscard]] std::optional<std::int32_t> find(const std::vector<Symbol> &path) const;

private:
  friend CodeTrie build_trie(const CodeTableSpec &spec);

  std::vector<Node> nodes_;
  std::uint32_t symbol_count_{0};
};

/// Builds and validates the trie: rejects duplicate or out-of-range
/// sequences, prefix violations, incomplete tables, escape edges that do not
/// terminate, and missing or stray flush words. Throws TableError.
CodeTrie build_trie(const CodeTableSpec &spec);

struct RomCell {
  Codeword flush;           // flush word of the parent prefix
  bool terminal{false};
  Codeword output;          // valid when terminal
  std::uint32_t pointer{0}; // block base of this node's children otherwise

  friend bool operator==(const RomCell &, const RomCell &) = default;
};

/// Breadth-first linearisation of a trie. Each non-terminal node owns a block
/// of symbol_count() consecutive cells, one per child, so that the child for
/// symbol s sits at pointer + s. The root's block starts at address 0.
struct CodeTableRom {
  std::vector<RomCell> cells;
  std::uint32_t root{0};
  std::uint32_t symbol_count{0};

  friend bool operator==(const CodeTableRom &, const CodeTableRom &) = default;
};

CodeTableRom compile_rom(const CodeTrie &trie);

struct StepResult {
  bool matched{false};
  Codeword output;           // valid when matched
  std::uint32_t next_address{0};
};

/// One ROM walk step from block base `address` with input `symbol`.
StepResult lookup_step(const CodeTableRom &rom, std::uint32_t address, Symbol symbol);

/// Flush word for the active prefix whose block base is `address`.
Codeword flush_word(const CodeTableRom &rom, std::uint32_t address);

/// `addr (flush, payload)` lines in the layout of a code-table ROM listing.
std::string dump_rom(const CodeTableRom &rom);

struct CodeTable {
  CodeTableSpec spec;
  CodeTrie trie;
  CodeTableRom rom;
};

class CodeTableSet {
public:
  CodeTableSet() = default;
  explicit CodeTableSet(std::vector<CodeTableSpec> specs, std::uint64_t initial_accumulator = 0);

  [[nodiscard]] std::size_t size() const noexcept { return tables_.size(); }
  [[nodiscard]] bool empty() const noexcept { return tables_.empty(); }
  [[nodiscard]] bool full() const noexcept { return tables_.size() == max_code_tables; }
  [[nodiscard]] const CodeTable &operator[](std::size_t i) const { return tables_.at(i); }
  [[nodiscard]] const std::vector<CodeTable> &tables() const noexcept { return tables_; }

  /// Σ̃_z(0) applied to every band (0 when the source does not declare it).
  [[nodiscard]] std::uint64_t initial_accumulator() const noexcept { return initial_accumulator_; }
  [[nodiscard]] const std::vector<std::string> &warnings() const noexcept { return warnings_; }
  /// CRC-32 of the canonical text form (thresholds, limits and ROM images).
  [[nodiscard]] std::uint32_t checksum() const noexcept { return checksum_; }
  [[nodiscard]] std::string canonical_text() const;

private:
  std::vector<CodeTable> tables_;
  std::uint64_t initial_accumulator_{0};
  std::vector<std::string> warnings_;
  std::uint32_t checksum_{0};
};

/// Parses the table-set text format:
///
///   # comment
///   initial_accumulator 0          (optional, global)
///   table 0
///   threshold 16384
///   limit 1
///   code 0 -> 4'hA
///   code 1 X -> 6'hE
///   flush (null) -> 1'h0
///   flush 1 -> 2'h1
///   end
///
/// Codewords are written `N'hHEX`, `N'bBITS` or `0bBITS` (length = digit
/// count). Throws TableError with the line number.
CodeTableSet parse_tableset(std::istream &in, const std::string &source = "<stream>");
CodeTableSet load_tableset(const std::filesystem::path &path);

/// Parses a single codeword literal; throws TableError.
Codeword parse_codeword(const std::string &token);

} // namespace hec

#endif
