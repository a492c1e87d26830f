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

#ifndef HEC_TEST_SUPPORT_HPP
#define HEC_TEST_SUPPORT_HPP

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "hec/codetables.hpp"
#include "hec/config.hpp"

namespace testing_support {

inline std::filesystem::path data_dir() { return HEC_DATA_DIR; }
inline std::filesystem::path example_table_path() { return data_dir() / "tables" / "example.tbl"; }
inline std::filesystem::path standard_table_path() { return data_dir() / "tables" / "standard.tbl"; }

inline hec::Codeword cw(std::uint64_t bits, std::uint32_t length) {
  return {bits, length, hec::CodewordKind::low};
}

// The worked example: L = 1, escape = 2.
inline hec::CodeTableSpec example_spec(std::uint64_t threshold = 16384) {
  hec::CodeTableSpec s;
  s.index = 0;
  s.threshold = threshold;
  s.limit = 1;
  s.entries = {{{0}, cw(0xA, 4)}, {{2}, cw(0xB, 5)}, {{1, 0}, cw(0xC, 4)},
               {{1, 1}, cw(0xD, 8)}, {{1, 2}, cw(0xE, 6)}};
  s.flush = {{{}, cw(0x0, 1)}, {{1}, cw(0x1, 2)}};
  return s;
}

inline hec::CodeTableSet example_set(std::uint64_t initial_accumulator = 0) {
  return hec::CodeTableSet({example_spec()}, initial_accumulator);
}

// Random tables with increasing thresholds starting at 2^14.
inline hec::CodeTableSet random_set(std::mt19937_64 &rng, std::size_t count,
                                    std::uint64_t initial_accumulator = 0);

inline hec::CoderParams params(std::uint32_t nx, std::uint32_t ny, std::uint32_t nz, std::uint32_t d,
                               std::uint32_t umax = 18, std::uint32_t gamma0 = 1,
                               std::uint32_t gamma_star = 6) {
  return {nx, ny, nz, d, umax, gamma0, gamma_star};
}

// Mixed-regime image: each band draws from zeros, tiny, small or full-range
// values so both coding paths, escapes and rescales are exercised.
inline std::vector<std::uint32_t> random_image(std::mt19937_64 &rng, const hec::CoderParams &p) {
  std::vector<std::uint32_t> regime(p.nz);
  std::uniform_int_distribution<std::uint32_t> pick(0, 3);
  for (auto &r : regime) {
    r = pick(rng);
  }
  const std::uint64_t full = p.d >= 32 ? 0xFFFFFFFFULL : (std::uint64_t{1} << p.d) - 1;
  std::vector<std::uint32_t> out(static_cast<std::size_t>(p.samples()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::uint32_t z = static_cast<std::uint32_t>(i % p.nz);
    if (std::uniform_int_distribution<int>(0, 15)(rng) == 0) {
      regime[z] = pick(rng);
    }
    std::uint64_t hi = 0;
    switch (regime[z]) {
    case 0:
      hi = 0;
      break;
    case 1:
      hi = std::min<std::uint64_t>(1, full);
      break;
    case 2:
      hi = std::min<std::uint64_t>(6, full);
      break;
    default:
      hi = full;
      break;
    }
    out[i] = static_cast<std::uint32_t>(std::uniform_int_distribution<std::uint64_t>(0, hi)(rng));
  }
  return out;
}

} // namespace testing_support

#include "oracles/oracles.hpp"

namespace testing_support {

inline hec::CodeTableSet random_set(std::mt19937_64 &rng, std::size_t count,
                                    std::uint64_t initial_accumulator) {
  std::vector<hec::CodeTableSpec> specs;
  std::uint64_t threshold = 16384;
  for (std::size_t i = 0; i < count; ++i) {
    const auto limit = std::uniform_int_distribution<std::uint32_t>(0, 4)(rng);
    specs.push_back(oracle::random_table(rng, limit, 4, static_cast<std::uint32_t>(i), threshold));
    threshold += std::uniform_int_distribution<std::uint64_t>(1, 1U << 15)(rng);
  }
  return hec::CodeTableSet(std::move(specs), initial_accumulator);
}

} // namespace testing_support

#endif
