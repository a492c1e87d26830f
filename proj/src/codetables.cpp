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

#include "hec/codetables.hpp"

#include <charconv>
#include <deque>
#include <fstream>
#include <sstream>

#include <zlib.h>

#include "hec/errors.hpp"

namespace hec {

namespace {

// Keeps T_i·Γ below 2^51 for every legal Γ.
constexpr std::uint64_t threshold_max = std::uint64_t{1} << 40;
constexpr std::uint32_t limit_max = 1024;

std::string format_sequence(const std::vector<Symbol> &seq, Symbol escape) {
  if (seq.empty()) {
    return "(null)";
  }
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i != 0) {
      out.push_back(' ');
    }
    out += seq[i] == escape ? std::string("X") : std::to_string(seq[i]);
  }
  return out;
}

std::string table_tag(const CodeTableSpec &spec) {
  return "table " + std::to_string(spec.index) + ": ";
}

} // namespace

std::size_t CodeTrie::terminal_count() const noexcept {
  std::size_t n = 0;
  for (const auto &node : nodes_) {
    n += node.output.has_value() ? 1 : 0;
  }
  return n;
}

std::optional<std::int32_t> CodeTrie::find(const std::vector<Symbol> &path) const {
  std::int32_t at = 0;
  for (const Symbol s : path) {
    const auto &node = nodes_[static_cast<std::size_t>(at)];
    if (node.children.empty() || s >= node.children.size() || node.children[s] == no_child) {
      return std::nullopt;
    }
    at = node.children[s];
  }
  return at;
}

CodeTrie build_trie(const CodeTableSpec &spec) {
  const auto tag = table_tag(spec);
  const Symbol escape = spec.escape();
  const std::uint32_t width = spec.symbol_count();

  if (spec.limit > limit_max) {
    throw TableError(tag + "symbol limit " + std::to_string(spec.limit) + " exceeds " +
                     std::to_string(limit_max));
  }
  if (spec.entries.empty()) {
    throw TableError(tag + "incomplete table: no entries");
  }

  CodeTrie trie;
  trie.symbol_count_ = width;
  auto &nodes = trie.nodes_;
  nodes.push_back({std::nullopt, std::nullopt, std::vector<std::int32_t>(width, CodeTrie::no_child), 0});

  for (const auto &entry : spec.entries) {
    const auto seq = format_sequence(entry.input, escape);
    if (entry.input.empty()) {
      throw TableError(tag + "empty input sequence");
    }
    if (!entry.output.well_formed()) {
      throw TableError(tag + "malformed output codeword for " + seq);
    }
    std::int32_t at = 0;
    for (std::size_t pos = 0; pos < entry.input.size(); ++pos) {
      const Symbol s = entry.input[pos];
      const bool last = pos + 1 == entry.input.size();
      if (s > escape) {
        throw TableError(tag + "symbol " + std::to_string(s) + " out of range in " + seq);
      }
      if (s == escape && !last) {
        throw TableError(tag + "escape must end the sequence in " + seq);
      }
      auto &node = nodes[static_cast<std::size_t>(at)];
      if (node.output) {
        throw TableError(tag + "prefix violation: a shorter entry is a prefix of " + seq);
      }
      const std::int32_t child = node.children[s];
      if (last) {
        if (child != CodeTrie::no_child) {
          const bool dup = nodes[static_cast<std::size_t>(child)].output.has_value();
          throw TableError(tag + (dup ? "duplicate sequence " : "prefix violation: ") + seq +
                           (dup ? "" : " is a prefix of another entry"));
        }
        const auto id = static_cast<std::int32_t>(nodes.size());
        CodeTrie::Node leaf;
        leaf.output = entry.output;
        leaf.depth = static_cast<std::uint32_t>(pos + 1);
        nodes[static_cast<std::size_t>(at)].children[s] = id;
        nodes.push_back(std::move(leaf));
        at = id;
      } else if (child == CodeTrie::no_child) {
        const auto id = static_cast<std::int32_t>(nodes.size());
        nodes[static_cast<std::size_t>(at)].children[s] = id;
        nodes.push_back({std::nullopt, std::nullopt,
                         std::vector<std::int32_t>(width, CodeTrie::no_child),
                         static_cast<std::uint32_t>(pos + 1)});
        at = id;
      } else {
        at = child;
      }
    }
  }

  // Completeness, walking with explicit paths so errors can name the prefix.
  std::deque<std::pair<std::int32_t, std::vector<Symbol>>> pending{{0, {}}};
  while (!pending.empty()) {
    auto [id, path] = std::move(pending.front());
    pending.pop_front();
    const auto &node = nodes[static_cast<std::size_t>(id)];
    if (node.output) {
      continue;
    }
    for (Symbol s = 0; s < width; ++s) {
      if (node.children[s] == CodeTrie::no_child) {
        throw TableError(tag + "incomplete table: prefix " + format_sequence(path, escape) +
                         " has no entry for symbol " + (s == escape ? "X" : std::to_string(s)));
      }
      auto next = path;
      next.push_back(s);
      pending.emplace_back(node.children[s], std::move(next));
    }
  }

  for (const auto &f : spec.flush) {
    const auto seq = format_sequence(f.prefix, escape);
    if (!f.word.well_formed()) {
      throw TableError(tag + "malformed flush word for " + seq);
    }
    const auto id = trie.find(f.prefix);
    if (!id || nodes[static_cast<std::size_t>(*id)].output) {
      throw TableError(tag + "flush entry " + seq + " is not a proper prefix of any entry");
    }
    auto &node = nodes[static_cast<std::size_t>(*id)];
    if (node.flush) {
      throw TableError(tag + "duplicate flush entry " + seq);
    }
    node.flush = f.word;
  }

  pending.assign({{0, {}}});
  while (!pending.empty()) {
    auto [id, path] = std::move(pending.front());
    pending.pop_front();
    const auto &node = nodes[static_cast<std::size_t>(id)];
    if (node.output) {
      continue;
    }
    if (!node.flush) {
      throw TableError(tag + "missing flush word for prefix " + format_sequence(path, escape));
    }
    for (Symbol s = 0; s < width; ++s) {
      auto next = path;
      next.push_back(s);
      pending.emplace_back(node.children[s], std::move(next));
    }
  }

  return trie;
}

CodeTableRom compile_rom(const CodeTrie &trie) {
  const std::uint32_t width = trie.symbol_count();
  CodeTableRom rom;
  rom.symbol_count = width;
  rom.root = 0;

  std::vector<std::uint32_t> base(trie.nodes().size(), 0);
  std::deque<std::int32_t> order{0};
  std::uint32_t next_free = width;
  rom.cells.resize(width);

  while (!order.empty()) {
    const auto id = order.front();
    order.pop_front();
    const auto &node = trie.nodes()[static_cast<std::size_t>(id)];
    const std::uint32_t block = base[static_cast<std::size_t>(id)];
    for (Symbol s = 0; s < width; ++s) {
      const auto child = node.children[s];
      const auto &cnode = trie.nodes()[static_cast<std::size_t>(child)];
      RomCell &cell = rom.cells[block + s];
      cell.flush = *node.flush;
      if (cnode.output) {
        cell.terminal = true;
        cell.output = *cnode.output;
      } else {
        cell.terminal = false;
        cell.pointer = next_free;
        base[static_cast<std::size_t>(child)] = next_free;
        next_free += width;
        rom.cells.resize(next_free);
        order.push_back(child);
      }
    }
  }
  return rom;
}

StepResult lookup_step(const CodeTableRom &rom, std::uint32_t address, Symbol symbol) {
  const std::uint64_t cell_addr = std::uint64_t{address} + symbol;
  if (symbol >= rom.symbol_count || cell_addr >= rom.cells.size()) {
    throw InternalError("code-table ROM address " + std::to_string(cell_addr) + " out of bounds");
  }
  const RomCell &cell = rom.cells[static_cast<std::size_t>(cell_addr)];
  if (cell.terminal) {
    return {true, cell.output, rom.root};
  }
  return {false, {}, cell.pointer};
}

Codeword flush_word(const CodeTableRom &rom, std::uint32_t address) {
  if (address >= rom.cells.size()) {
    throw InternalError("code-table ROM address " + std::to_string(address) + " out of bounds");
  }
  Codeword cw = rom.cells[address].flush;
  cw.kind = CodewordKind::flush;
  return cw;
}

std::string dump_rom(const CodeTableRom &rom) {
  std::ostringstream out;
  for (std::size_t a = 0; a < rom.cells.size(); ++a) {
    const auto &cell = rom.cells[a];
    out << a << " (" << to_verilog(cell.flush) << ", ";
    if (cell.terminal) {
      out << to_verilog(cell.output);
    } else {
      out << "ptr = " << cell.pointer;
    }
    out << ")\n";
  }
  return out.str();
}

CodeTableSet::CodeTableSet(std::vector<CodeTableSpec> specs, std::uint64_t initial_accumulator)
    : initial_accumulator_(initial_accumulator) {
  if (specs.empty()) {
    throw TableError("table set contains no tables");
  }
  if (specs.size() > max_code_tables) {
    throw TableError("table set has " + std::to_string(specs.size()) + " tables, at most 16 allowed");
  }
  tables_.reserve(specs.size());
  for (std::size_t i = 0; i < specs.size(); ++i) {
    auto &spec = specs[i];
    if (spec.index != i) {
      throw TableError("table indices must run 0.." + std::to_string(specs.size() - 1) +
                       " in order; found " + std::to_string(spec.index) + " at position " +
                       std::to_string(i));
    }
    if (spec.threshold == 0 || spec.threshold > threshold_max) {
      throw TableError(table_tag(spec) + "threshold must be in [1, 2^40]");
    }
    for (auto &e : spec.entries) {
      e.output.kind = CodewordKind::low;
    }
    for (auto &f : spec.flush) {
      f.word.kind = CodewordKind::flush;
    }
    auto trie = build_trie(spec);
    auto rom = compile_rom(trie);
    tables_.push_back({std::move(spec), std::move(trie), std::move(rom)});
  }
  for (std::size_t i = 1; i < tables_.size(); ++i) {
    if (tables_[i].spec.threshold <= tables_[i - 1].spec.threshold) {
      warnings_.push_back("threshold T_" + std::to_string(i) + "=" +
                          std::to_string(tables_[i].spec.threshold) + " is not above T_" +
                          std::to_string(i - 1) + "=" + std::to_string(tables_[i - 1].spec.threshold) +
                          "; code index selection assumes increasing thresholds");
    }
  }
  const auto text = canonical_text();
  checksum_ = static_cast<std::uint32_t>(
      crc32(crc32(0L, Z_NULL, 0), reinterpret_cast<const Bytef *>(text.data()),
            static_cast<uInt>(text.size())));
}

std::string CodeTableSet::canonical_text() const {
  std::ostringstream out;
  out << "initial_accumulator " << initial_accumulator_ << "\n";
  for (const auto &t : tables_) {
    out << "table " << t.spec.index << " threshold " << t.spec.threshold << " limit " << t.spec.limit
        << "\n"
        << dump_rom(t.rom);
  }
  return out.str();
}

Codeword parse_codeword(const std::string &token) {
  auto fail = [&](const std::string &why) -> Codeword {
    throw TableError("bad codeword '" + token + "': " + why);
  };
  Codeword cw;
  if (token.rfind("0b", 0) == 0) {
    const auto digits = token.substr(2);
    if (digits.empty() || digits.size() > Codeword::max_length) {
      return fail("length must be 1..64");
    }
    for (const char c : digits) {
      if (c != '0' && c != '1') {
        return fail("binary digits expected");
      }
      cw.bits = (cw.bits << 1) | static_cast<std::uint64_t>(c - '0');
    }
    cw.length = static_cast<std::uint32_t>(digits.size());
    return cw;
  }
  const auto tick = token.find('\'');
  if (tick == std::string::npos || tick == 0 || tick + 2 > token.size()) {
    return fail("expected N'hHEX, N'bBITS or 0bBITS");
  }
  std::uint32_t length = 0;
  const auto [lp, lec] = std::from_chars(token.data(), token.data() + tick, length);
  if (lec != std::errc{} || lp != token.data() + tick || length == 0 ||
      length > Codeword::max_length) {
    return fail("length must be 1..64");
  }
  const char radix = token[tick + 1];
  const auto digits = token.substr(tick + 2);
  int base = 0;
  if (radix == 'h' || radix == 'H') {
    base = 16;
  } else if (radix == 'b' || radix == 'B') {
    base = 2;
  } else {
    return fail("radix must be h or b");
  }
  std::uint64_t value = 0;
  const auto [vp, vec] = std::from_chars(digits.data(), digits.data() + digits.size(), value, base);
  if (digits.empty() || vec != std::errc{} || vp != digits.data() + digits.size()) {
    return fail("bad digits");
  }
  cw.bits = value;
  cw.length = length;
  if (!cw.well_formed()) {
    return fail("value does not fit in " + std::to_string(length) + " bits");
  }
  return cw;
}

namespace {

// Symbol tokens before the block's limit is known; nullopt is the escape.
using RawSequence = std::vector<std::optional<Symbol>>;

struct PendingTable {
  std::uint32_t index{0};
  std::optional<std::uint64_t> threshold;
  std::optional<std::uint32_t> limit;
  std::vector<std::pair<RawSequence, Codeword>> codes;
  std::vector<std::pair<RawSequence, Codeword>> flushes;
  std::size_t line{0};
};

std::vector<std::string> split_ws(const std::string &line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) {
    out.push_back(tok);
  }
  return out;
}

template <typename T> T parse_uint(const std::string &tok, const std::string &where) {
  T value{};
  const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || p != tok.data() + tok.size()) {
    throw TableError(where + "'" + tok + "' is not an unsigned integer");
  }
  return value;
}

} // namespace

CodeTableSet parse_tableset(std::istream &in, const std::string &source) {
  std::vector<CodeTableSpec> specs;
  std::uint64_t initial_accumulator = 0;
  std::optional<PendingTable> open;

  auto finish = [&](PendingTable &p, const std::string &where) {
    if (!p.threshold || !p.limit) {
      throw TableError(where + "table " + std::to_string(p.index) + " needs threshold and limit");
    }
    CodeTableSpec spec;
    spec.index = p.index;
    spec.threshold = *p.threshold;
    spec.limit = *p.limit;
    auto resolve = [&](const RawSequence &raw) {
      std::vector<Symbol> seq;
      for (const auto &s : raw) {
        if (s && *s > spec.limit) {
          throw TableError(where + "table " + std::to_string(p.index) + ": symbol " +
                           std::to_string(*s) + " exceeds limit " + std::to_string(spec.limit) +
                           " (write the escape as X)");
        }
        seq.push_back(s ? *s : spec.escape());
      }
      return seq;
    };
    for (auto &[raw, cw] : p.codes) {
      spec.entries.push_back({resolve(raw), cw});
    }
    for (auto &[raw, cw] : p.flushes) {
      spec.flush.push_back({resolve(raw), cw});
    }
    specs.push_back(std::move(spec));
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    const auto tok = split_ws(line);
    if (tok.empty()) {
      continue;
    }
    const auto where = source + ":" + std::to_string(line_no) + ": ";
    const auto &kw = tok[0];
    try {
      if (kw == "initial_accumulator") {
        if (open || tok.size() != 2) {
          throw TableError("initial_accumulator takes one value, outside table blocks");
        }
        initial_accumulator = parse_uint<std::uint64_t>(tok[1], "");
      } else if (kw == "table") {
        if (open) {
          throw TableError("missing 'end' before new table");
        }
        if (tok.size() != 2) {
          throw TableError("expected 'table <index>'");
        }
        open = PendingTable{parse_uint<std::uint32_t>(tok[1], ""), {}, {}, {}, {}, line_no};
      } else if (kw == "end") {
        if (!open) {
          throw TableError("'end' without 'table'");
        }
        finish(*open, where);
        open.reset();
      } else if (!open) {
        throw TableError("'" + kw + "' outside a table block");
      } else if (kw == "threshold" && tok.size() == 2) {
        open->threshold = parse_uint<std::uint64_t>(tok[1], "");
      } else if (kw == "limit" && tok.size() == 2) {
        open->limit = parse_uint<std::uint32_t>(tok[1], "");
      } else if (kw == "code" || kw == "flush") {
        if (tok.size() < 3 || tok[tok.size() - 2] != "->") {
          throw TableError("expected '" + kw + " <symbols> -> <codeword>'");
        }
        RawSequence raw;
        for (std::size_t i = 1; i + 2 < tok.size(); ++i) {
          if (tok[i] == "X") {
            raw.emplace_back(std::nullopt);
          } else if (tok[i] == "(null)" && kw == "flush" && tok.size() == 4) {
            // null prefix
          } else {
            raw.emplace_back(parse_uint<Symbol>(tok[i], ""));
          }
        }
        auto cw = parse_codeword(tok.back());
        (kw == "code" ? open->codes : open->flushes).emplace_back(std::move(raw), cw);
      } else {
        throw TableError("unrecognised line '" + kw + "'");
      }
    } catch (const TableError &e) {
      const std::string msg = e.what();
      throw TableError(msg.rfind(source, 0) == 0 ? msg : where + msg);
    }
  }
  if (open) {
    throw TableError(source + ":" + std::to_string(open->line) + ": table block not closed");
  }
  try {
    return CodeTableSet(std::move(specs), initial_accumulator);
  } catch (const TableError &e) {
    throw TableError(source + ": " + e.what());
  }
}

CodeTableSet load_tableset(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) {
    throw TableError("cannot open table file " + path.string());
  }
  return parse_tableset(in, path.string());
}

} // namespace hec
