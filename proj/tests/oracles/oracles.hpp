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

// Independent models used as test oracles. None of these call into the
// library's coding functions; they restate each rule in the most literal form
// (bit strings, linear scans, per-band arrays) so a shared mistake would have
// to be made twice.
#ifndef HEC_TEST_ORACLES_HPP
#define HEC_TEST_ORACLES_HPP

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "hec/codetables.hpp"

namespace oracle {

// Bit string of a codeword built one character at a time.
inline std::string gpo2(std::uint64_t delta, std::uint32_t k, std::uint32_t d, std::uint32_t umax) {
  std::string out;
  std::uint64_t quotient = delta;
  for (std::uint32_t i = 0; i < k; ++i) {
    quotient /= 2;
  }
  if (quotient < umax) {
    for (std::uint32_t i = k; i-- > 0;) {
      out += ((delta >> i) & 1U) != 0 ? '1' : '0';
    }
    out += '1';
    out.append(static_cast<std::size_t>(quotient), '0');
  } else {
    for (std::uint32_t i = d; i-- > 0;) {
      out += ((delta >> i) & 1U) != 0 ? '1' : '0';
    }
    out.append(umax, '0');
  }
  return out;
}

inline std::string bits_of(std::uint64_t value, std::uint32_t length) {
  std::string out;
  for (std::uint32_t i = length; i-- > 0;) {
    out += ((value >> i) & 1U) != 0 ? '1' : '0';
  }
  return out;
}

// Every k in [0, cap] is tried; the largest passing one wins. No monotonicity
// is assumed.
inline std::uint32_t k_scan(std::uint64_t sigma, std::uint64_t gamma, std::uint32_t d) {
  const std::uint32_t cap = d >= 4 ? d - 2 : 2;
  const std::uint64_t rhs = sigma + (49 * gamma) / 32;
  std::uint32_t best = 0;
  for (std::uint32_t k = 0; k <= cap; ++k) {
    std::uint64_t lhs = gamma;
    bool over = false;
    for (std::uint32_t j = 0; j < k; ++j) {
      lhs *= 2;
      if (lhs > rhs) {
        over = true;
      }
    }
    if (!over && lhs <= rhs) {
      best = k;
    }
  }
  return best;
}

// Largest qualifying index or -1.
inline int index_scan(std::uint64_t sigma, std::uint64_t gamma, const std::vector<std::uint64_t> &thresholds) {
  int best = -1;
  for (std::size_t i = 0; i < thresholds.size(); ++i) {
    if (sigma * 16384 <= thresholds[i] * gamma) {
      best = static_cast<int>(i);
    }
  }
  return best;
}

struct AcssStep {
  std::uint64_t sigma;
  std::uint64_t gamma;
  bool rescaled;
  std::uint32_t bit;
  friend bool operator==(const AcssStep &, const AcssStep &) = default;
};

// Per-band accumulator array plus one counter per spatial position, updated
// straight from the recurrence. Samples in BIP order; position 0 passes the
// initial values through.
struct AcssRecurrence {
  std::vector<std::uint64_t> sigma;
  std::uint64_t gamma;
  std::uint64_t gamma_prev;
  std::uint32_t nz;
  std::uint32_t gamma_star;
  std::uint64_t count{0};

  AcssRecurrence(std::uint32_t bands, std::uint32_t gamma0, std::uint32_t gstar, std::uint64_t sigma0)
      : sigma(bands, sigma0), gamma(std::uint64_t{1} << gamma0), gamma_prev(gamma), nz(bands),
        gamma_star(gstar) {}

  AcssStep step(std::uint64_t delta) {
    const std::uint64_t t = count / nz;
    const std::uint32_t z = static_cast<std::uint32_t>(count % nz);
    ++count;
    if (t == 0) {
      return {sigma[z], gamma, false, 0};
    }
    if (z == 0) {
      gamma_prev = gamma;
    }
    const std::uint64_t saturated = (std::uint64_t{1} << gamma_star) - 1;
    const std::uint64_t sum = sigma[z] + 4 * delta;
    AcssStep out{};
    if (gamma_prev < saturated) {
      sigma[z] = sum;
      out = {sum, gamma_prev + 1, false, 0};
    } else {
      sigma[z] = (sum + 1) / 2;
      out = {sigma[z], (gamma_prev + 1) / 2, true, static_cast<std::uint32_t>(sum % 2)};
    }
    gamma = out.gamma;
    return out;
  }
};

// Packs a '0'/'1' string into 64-bit words, first character in bit 63.
inline std::vector<std::uint64_t> pack(const std::string &bits) {
  std::vector<std::uint64_t> words((bits.size() + 63) / 64, 0);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      words[i / 64] |= std::uint64_t{1} << (63 - i % 64);
    }
  }
  return words;
}

// Records the raw symbols fed to each table since its last match and looks
// outputs up by sequence in the table's own entry list.
class PrefixTracker {
public:
  explicit PrefixTracker(const hec::CodeTableSpec &spec) : spec_(&spec) {
    for (const auto &e : spec.entries) {
      entries_[e.input] = e.output;
    }
    for (const auto &f : spec.flush) {
      flush_[f.prefix] = f.word;
    }
  }

  // Returns the matched output when the sequence completes an entry.
  std::optional<hec::Codeword> feed(hec::Symbol s) {
    prefix_.push_back(s);
    const auto it = entries_.find(prefix_);
    if (it == entries_.end()) {
      return std::nullopt;
    }
    prefix_.clear();
    return it->second;
  }

  [[nodiscard]] hec::Codeword flush() const { return flush_.at(prefix_); }
  [[nodiscard]] const std::vector<hec::Symbol> &prefix() const { return prefix_; }

private:
  const hec::CodeTableSpec *spec_;
  std::map<std::vector<hec::Symbol>, hec::Codeword> entries_;
  std::map<std::vector<hec::Symbol>, hec::Codeword> flush_;
  std::vector<hec::Symbol> prefix_;
};

inline hec::Codeword random_codeword(std::mt19937_64 &rng, std::uint32_t max_len = 16) {
  std::uniform_int_distribution<std::uint32_t> len(1, max_len);
  hec::Codeword cw;
  cw.length = len(rng);
  cw.bits = rng() & ((std::uint64_t{1} << cw.length) - 1);
  return cw;
}

// Random complete prefix-free table over {0..L, X}. Escape edges terminate;
// each other edge recurses with falling probability until max_depth.
inline hec::CodeTableSpec random_table(std::mt19937_64 &rng, std::uint32_t limit, std::uint32_t max_depth,
                                       std::uint32_t index = 0, std::uint64_t threshold = 16384) {
  hec::CodeTableSpec spec;
  spec.index = index;
  spec.threshold = threshold;
  spec.limit = limit;
  std::vector<std::vector<hec::Symbol>> open{{}};
  while (!open.empty()) {
    auto prefix = open.back();
    open.pop_back();
    spec.flush.push_back({prefix, random_codeword(rng, 8)});
    for (hec::Symbol s = 0; s <= limit + 1; ++s) {
      auto child = prefix;
      child.push_back(s);
      const bool grow = s <= limit && child.size() < max_depth &&
                        std::uniform_int_distribution<int>(0, 99)(rng) < 45;
      if (grow) {
        open.push_back(child);
      } else {
        spec.entries.push_back({child, random_codeword(rng)});
      }
    }
  }
  return spec;
}

} // namespace oracle

#endif
