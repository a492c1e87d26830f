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

#include <set>

#include "hec/coder_high.hpp"
#include "hec/errors.hpp"
#include "support.hpp"

TEST(SelectHilo, FixtureThreshold) {
  EXPECT_TRUE(hec::select_hilo(5, 10, 16384));
  EXPECT_FALSE(hec::select_hilo(11, 10, 16384));
  EXPECT_TRUE(hec::select_hilo(10, 10, 16384)); // equality is inclusive
  EXPECT_TRUE(hec::select_hilo(3, 4, 12288));   // 3·2^14 = 12288·4
  EXPECT_FALSE(hec::select_hilo(4, 4, 12288));
}

TEST(SelectHilo, WidestOperands) {
  // Σ̃ < 2^45 and T·Γ < 2^51 both fit.
  const std::uint64_t sigma = (std::uint64_t{1} << 45) - 1;
  EXPECT_FALSE(hec::select_hilo(sigma, 2047, std::uint64_t{1} << 40));
  EXPECT_TRUE(hec::select_hilo(sigma >> 20, 2047, std::uint64_t{1} << 40));
}

TEST(ComputeK, Examples) {
  EXPECT_EQ(hec::compute_k(0, 1, 16), 0U);
  EXPECT_EQ(hec::compute_k(2, 1, 16), 1U);
  EXPECT_EQ(hec::compute_k(std::uint64_t{1} << 20, 1, 16), 14U);
  EXPECT_EQ(hec::compute_k(std::uint64_t{1} << 20, 1, 2), 2U); // cap is max(d-2, 2)
  EXPECT_EQ(hec::compute_k(std::uint64_t{1} << 20, 1, 3), 2U);
  EXPECT_THROW((void)hec::compute_k(1, 0, 8), hec::InternalError);
}

TEST(ComputeK, MatchesScanOnDenseGrid) {
  for (std::uint32_t d : {2U, 3U, 4U, 8U, 16U, 32U}) {
    for (std::uint64_t gamma = 1; gamma <= 80; ++gamma) {
      std::uint32_t prev = 0;
      for (std::uint64_t sigma = 0; sigma <= 3000; ++sigma) {
        const auto k = hec::compute_k(sigma, gamma, d);
        ASSERT_EQ(k, oracle::k_scan(sigma, gamma, d)) << "d=" << d << " gamma=" << gamma << " sigma=" << sigma;
        ASSERT_GE(k, prev);
        prev = k;
      }
    }
  }
}

TEST(ComputeK, MatchesScanOnWideValues) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200000; ++i) {
    const std::uint32_t d = 2 + static_cast<std::uint32_t>(rng() % 31);
    const std::uint64_t gamma = 1 + rng() % 2047;
    const std::uint64_t sigma = rng() >> (rng() % 64 + 19);
    ASSERT_EQ(hec::compute_k(sigma, gamma, d), oracle::k_scan(sigma, gamma, d));
  }
}

TEST(EncodeGpo2, Examples) {
  const auto a = hec::encode_gpo2(0, 0, 8, 18);
  EXPECT_EQ(a.length, 1U);
  EXPECT_EQ(a.bits, 1U);
  EXPECT_EQ(a.kind, hec::CodewordKind::high);
  const auto b = hec::encode_gpo2(5, 1, 8, 18);
  EXPECT_EQ(hec::to_bit_string(b), "1100");
  const auto c = hec::encode_gpo2(15, 0, 4, 8);
  EXPECT_EQ(c.length, 12U);
  EXPECT_EQ(hec::to_bit_string(c), "111100000000");
}

TEST(EncodeGpo2, Preconditions) {
  EXPECT_THROW((void)hec::encode_gpo2(16, 0, 4, 8), hec::ConfigError);
  EXPECT_THROW((void)hec::encode_gpo2(1, 3, 4, 8), hec::ConfigError);
  EXPECT_NO_THROW((void)hec::encode_gpo2(3, 2, 2, 8));
}

TEST(EncodeGpo2, MatchesBitConstructor) {
  for (std::uint32_t d : {2U, 4U, 8U, 12U}) {
    const std::uint64_t n = std::uint64_t{1} << d;
    for (std::uint32_t umax : {8U, 9U, 18U, 32U}) {
      for (std::uint32_t k = 0; k <= hec::max_code_index(d); ++k) {
        for (std::uint64_t delta = 0; delta < n; ++delta) {
          const auto cw = hec::encode_gpo2(delta, k, d, umax);
          ASSERT_EQ(hec::to_bit_string(cw), oracle::gpo2(delta, k, d, umax));
          ASSERT_TRUE(cw.well_formed());
          ASSERT_LE(cw.length, d + umax);
          ASSERT_EQ(cw.length == d + umax, (delta >> k) >= umax)
              << "delta=" << delta << " k=" << k << " umax=" << umax;
        }
      }
    }
  }
}

TEST(EncodeGpo2, FullWidthValues) {
  const auto cw = hec::encode_gpo2(0xFFFFFFFFULL, 0, 32, 32);
  EXPECT_EQ(cw.length, 64U);
  EXPECT_EQ(hec::to_bit_string(cw), oracle::gpo2(0xFFFFFFFFULL, 0, 32, 32));
  const auto k30 = hec::encode_gpo2(0xFFFFFFFFULL, 30, 32, 32);
  EXPECT_EQ(hec::to_bit_string(k30), oracle::gpo2(0xFFFFFFFFULL, 30, 32, 32));
}

TEST(EncodeGpo2, InjectiveInFirstCase) {
  for (std::uint32_t k = 0; k <= 6; ++k) {
    for (std::uint32_t umax : {8U, 18U}) {
      std::set<std::pair<std::uint64_t, std::uint32_t>> seen;
      for (std::uint64_t delta = 0; delta < umax * (std::uint64_t{1} << k); ++delta) {
        const auto cw = hec::encode_gpo2(delta, k, 16, umax);
        ASSERT_TRUE(seen.insert({cw.bits, cw.length}).second);
      }
    }
  }
}
