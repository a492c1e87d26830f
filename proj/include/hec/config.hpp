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

#ifndef HEC_CONFIG_HPP
#define HEC_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <istream>
#include <string>
#include <vector>

namespace hec {

// Library-wide maximum ranges. With d <= 32 and gamma_star <= 11 the
// accumulator is at most 45 bits wide, so Σ̃·2^14 (59 bits) and every
// intermediate in the statistics update fit in std::uint64_t.
namespace limits {
inline constexpr std::uint32_t nx_max = 1U << 16;
inline constexpr std::uint32_t ny_max = 1U << 16;
inline constexpr std::uint32_t nz_max = 1U << 14;
inline constexpr std::uint32_t d_min = 2;
inline constexpr std::uint32_t d_max = 32;
inline constexpr std::uint32_t umax_min = 8;
inline constexpr std::uint32_t umax_max = 32;
inline constexpr std::uint32_t gamma0_min = 1;
inline constexpr std::uint32_t gamma_star_floor = 4;
inline constexpr std::uint32_t gamma_star_max = 11;
inline constexpr std::uint32_t accumulator_bits_max = 2 + d_max + gamma_star_max;
} // namespace limits

struct CoderParams {
  std::uint32_t nx{0};
  std::uint32_t ny{0};
  std::uint32_t nz{0};
  std::uint32_t d{0};
  std::uint32_t umax{0};
  std::uint32_t gamma0{0};
  std::uint32_t gamma_star{0};

  [[nodiscard]] std::uint32_t accumulator_bits() const noexcept { return 2 + d + gamma_star; }
  [[nodiscard]] std::uint64_t positions() const noexcept {
    return static_cast<std::uint64_t>(nx) * ny;
  }
  [[nodiscard]] std::uint64_t samples() const noexcept { return positions() * nz; }

  friend bool operator==(const CoderParams &, const CoderParams &) = default;
};

struct ParamViolation {
  std::string parameter;
  std::string message;
};

struct ValidationResult {
  CoderParams params;
  std::vector<ParamViolation> violations;

  [[nodiscard]] bool ok() const noexcept { return violations.empty(); }
  [[nodiscard]] std::string describe() const;
};

/// Checks every range constraint; all violations are reported, not just the
/// first. `params` is echoed back unchanged either way.
ValidationResult validate(const CoderParams &params);

/// Throws ConfigError listing every violation.
CoderParams require_valid(const CoderParams &params);

/// Sets one field by name ("nx", "gamma_star", "gamma-star", ...). Throws
/// ConfigError on unknown keys.
void set_param(CoderParams &params, const std::string &key, std::uint64_t value);

/// Reads `key=value` lines, `#` comments. Keys not present leave the field
/// untouched. Errors carry the line number.
void load_params(std::istream &in, CoderParams &params, const std::string &source = "<stream>");
void load_params_file(const std::filesystem::path &path, CoderParams &params);

/// Inverse of load_params: one key=value per line in field order.
std::string format_params(const CoderParams &params);

} // namespace hec

#endif
