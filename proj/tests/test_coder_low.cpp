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

#include <gtest/gtest.h>

#include "hec/coder_low.hpp"
#include "hec/errors.hpp"
#include "support.hpp"

using testing_support::cw;
using testing_support::example_spec;

namespace {

hec::CodeTableSet two_tables() {
  auto t1 = example_spec(1U << 15);
  t1.index = 1;
  return hec::CodeTableSet({example_spec(1U << 14), t1});
}

hec::CodeTableSet sixteen_tables() {
  std::vector<hec::CodeTableSpec> specs;
  for (std::uint32_t i = 0; i < 16; ++i) {
    auto s = example_spec((i + 1) * 16384);
    s.index = i;
    specs.push_back(s);
  }
  return hec::CodeTableSet(specs);
}

} // namespace

TEST(SelectCodeIndex, FixtureThresholds) {
  const auto set = two_tables();
  const auto idx = hec::select_code_index(3, 2, set);
  EXPECT_EQ(idx.index, 1U);
  EXPECT_EQ(idx.limit, 1U);
  EXPECT_EQ(hec::select_code_index(2, 2, set).index, 1U);
  EXPECT_EQ(hec::select_code_index(1, 2, set).index, 1U);
}

TEST(SelectCodeIndex, ZeroAccumulatorPicksLargest) {
  const auto set = sixteen_tables();
  for (std::uint64_t gamma : {1U, 2U, 100U, 2047U}) {
    EXPECT_EQ(hec::select_code_index(0, gamma, set).index, 15U);
  }
}

TEST(SelectCodeIndex, FixtureModeClampsToFirstTable) {
  const auto set = two_tables();
  EXPECT_EQ(hec::select_code_index(5, 2, set).index, 0U);
  EXPECT_EQ(hec::select_code_index(1000, 1, testing_support::example_set()).index, 0U);
}

TEST(SelectCodeIndex, FullSetWithoutQualifierThrows) {
  EXPECT_THROW((void)hec::select_code_index(17, 1, sixteen_tables()), hec::InternalError);
}

TEST(SelectCodeIndex, MatchesLinearScan) {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 20; ++round) {
    const auto set = testing_support::random_set(rng, 16);
    std::vector<std::uint64_t> thresholds;
    for (const auto &t : set.tables()) {
      thresholds.push_back(t.spec.threshold);
    }
    for (int i = 0; i < 5000; ++i) {
      const std::uint64_t gamma = 1 + rng() % 2047;
      const std::uint64_t sigma = rng() % (gamma * 40);
      const int want = oracle::index_scan(sigma, gamma, thresholds);
      if (want < 0) {
        EXPECT_THROW((void)hec::select_code_index(sigma, gamma, set), hec::InternalError);
      } else {
        const auto got = hec::select_code_index(sigma, gamma, set);
        ASSERT_EQ(static_cast<int>(got.index), want);
        ASSERT_EQ(got.limit, set[got.index].spec.limit);
      }
    }
  }
}

TEST(MapInputSymbol, Examples) {
  EXPECT_EQ(hec::map_input_symbol(0, 1), 0U);
  EXPECT_EQ(hec::map_input_symbol(1, 1), 1U);
  EXPECT_EQ(hec::map_input_symbol(5, 1), 2U);
  EXPECT_EQ(hec::map_input_symbol(0, 0), 0U);
  EXPECT_EQ(hec::map_input_symbol(0xFFFFFFFFULL, 3), 4U);
}

TEST(LowCoderState, ExampleMatches) {
  const auto set = testing_support::example_set();
  hec::LowCoderState state(set);
  EXPECT_TRUE(state.at_root(0));

  const auto a = state.advance(0, 0, 0, 1, 8, 18);
  ASSERT_TRUE(a.match());
  EXPECT_FALSE(a.residual);
  EXPECT_TRUE(a.matched->same_bits(cw(0xA, 4)));
  EXPECT_EQ(a.matched->kind, hec::CodewordKind::low);

  const auto first = state.advance(0, 1, 1, 1, 8, 18);
  EXPECT_FALSE(first.match());
  EXPECT_FALSE(first.residual);
  EXPECT_FALSE(state.at_root(0));
  const auto second = state.advance(0, 1, 1, 1, 8, 18);
  ASSERT_TRUE(second.match());
  EXPECT_TRUE(second.matched->same_bits(cw(0xD, 8)));
  EXPECT_TRUE(state.at_root(0));
}

TEST(LowCoderState, EscapeCarriesResidual) {
  const auto set = testing_support::example_set();
  hec::LowCoderState state(set);
  const auto sym = hec::map_input_symbol(5, 1);
  const auto e = state.advance(0, sym, 5, 1, 8, 18);
  ASSERT_TRUE(e.residual);
  EXPECT_EQ(hec::to_bit_string(*e.residual), "1000");
  EXPECT_EQ(e.residual->kind, hec::CodewordKind::escape_residual);
  ASSERT_TRUE(e.match());
  EXPECT_TRUE(e.matched->same_bits(cw(0xB, 5)));
  EXPECT_TRUE(state.at_root(0));
}

TEST(LowCoderState, FlushActivePrefix) {
  const auto set = testing_support::example_set();
  hec::LowCoderState state(set);
  auto words = state.flush_all();
  ASSERT_EQ(words.size(), 1U);
  EXPECT_TRUE(words[0].same_bits(cw(0, 1)));
  EXPECT_EQ(words[0].kind, hec::CodewordKind::flush);
  (void)state.advance(0, 1, 1, 1, 8, 18);
  words = state.flush_all();
  EXPECT_TRUE(words[0].same_bits(cw(1, 2)));
  EXPECT_TRUE(state.at_root(0));
}

// The register file tracks exactly the symbols fed to each table since its
// last match, checked against raw prefix lists on random tables.
TEST(LowCoderState, ShadowsPrefixTracker) {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 50; ++round) {
    const auto count = 1 + rng() % 16;
    const auto set = testing_support::random_set(rng, count);
    hec::LowCoderState state(set);
    std::vector<oracle::PrefixTracker> shadow;
    for (const auto &t : set.tables()) {
      shadow.emplace_back(t.spec);
    }
    for (int i = 0; i < 3000; ++i) {
      const auto table = static_cast<std::uint32_t>(rng() % count);
      const auto limit = set[table].spec.limit;
      const std::uint64_t delta = rng() % (limit + 4);
      const auto sym = hec::map_input_symbol(delta, limit);
      const auto got = state.advance(table, sym, delta, limit, 8, 18);
      const auto want = shadow[table].feed(sym);
      ASSERT_EQ(got.match(), want.has_value());
      if (want) {
        EXPECT_TRUE(got.matched->same_bits(*want));
        EXPECT_TRUE(state.at_root(table));
      }
      if (sym == limit + 1) {
        ASSERT_TRUE(got.match());
        ASSERT_TRUE(got.residual);
        EXPECT_EQ(hec::to_bit_string(*got.residual), oracle::gpo2(delta - limit - 1, 0, 8, 18));
      } else {
        EXPECT_FALSE(got.residual);
      }
      EXPECT_EQ(state.at_root(table), shadow[table].prefix().empty());
    }
    const auto flushed = state.flush_all();
    ASSERT_EQ(flushed.size(), count);
    for (std::size_t t = 0; t < count; ++t) {
      EXPECT_TRUE(flushed[t].same_bits(shadow[t].flush()));
      EXPECT_TRUE(state.at_root(t));
    }
  }
}
