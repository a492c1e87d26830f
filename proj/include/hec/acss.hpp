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

#ifndef HEC_ACSS_HPP
#define HEC_ACSS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "hec/config.hpp"

namespace hec {

/// Result of one statistics update for one sample.
struct AcssOutput {
  std::uint64_t sigma{0}; // Σ̃_z(t)
  std::uint64_t gamma{0}; // Γ(t)
  bool rescaled{false};
  std::uint32_t rescale_bit{0}; // meaningful only when rescaled
};

/// Single-sample recurrence: given Σ̃_z(t-1), Γ(t-1) and δ_z(t), returns the
/// updated pair. When Γ(t-1) has saturated at 2^γ*-1 both values are halved
/// and the bit lost from Σ̃_z(t-1)+4δ is reported as the rescale bit.
AcssOutput update_statistics(std::uint64_t sigma_prev, std::uint64_t gamma_prev,
                             std::uint64_t delta, std::uint32_t gamma_star);

/// Adaptive code selection statistics for a BIP sample stream.
///
/// The per-band accumulators live in a queue of depth nz; each entry also
/// carries the counter value it was last updated with, so a band sees
/// Σ̃(t-nz) and Γ(t-nz) exactly as the feedback loop delivers them. Γ itself is
/// a function of the spatial position only, so all bands at position t agree
/// on it.
class AcssState {
public:
  /// Γ(0) = 2^gamma0, Σ̃_z(0) = initial_sigma for every band.
  AcssState(const CoderParams &params, std::uint64_t initial_sigma);

  /// Injected state: per-band Σ̃ (band order) and Γ as of the last update,
  /// positioned `samples_done` samples into the stream. Throws ConfigError on
  /// a size mismatch or out-of-range values.
  AcssState(const CoderParams &params, std::span<const std::uint64_t> sigma, std::uint64_t gamma,
            std::uint64_t samples_done = 0);

  /// Processes the next sample in BIP order. For position t = 0 the
  /// statistics are left at their initial values and rescaled is false.
  /// Throws ConfigError if delta >= 2^d and InternalError past end of image.
  AcssOutput update(std::uint64_t delta);

  /// Final accumulators in band order, each below 2^(2+d+γ*). Throws
  /// InternalError before the last sample has been processed.
  [[nodiscard]] std::vector<std::uint64_t> drain_final_accumulators() const;

  [[nodiscard]] bool end_of_image() const noexcept { return samples_done_ == total_samples_; }
  [[nodiscard]] std::uint64_t samples_done() const noexcept { return samples_done_; }
  [[nodiscard]] std::uint32_t band() const noexcept { return static_cast<std::uint32_t>(samples_done_ % nz_); }
  [[nodiscard]] std::uint64_t position() const noexcept { return samples_done_ / nz_; }
  /// Counter value most recently produced (Γ(t) of the last processed position).
  [[nodiscard]] std::uint64_t gamma() const noexcept { return queue_[(head_ + nz_ - 1) % nz_].gamma; }
  [[nodiscard]] std::size_t queue_depth() const noexcept { return queue_.size(); }

private:
  struct Slot {
    std::uint64_t sigma;
    std::uint64_t gamma;
  };

  std::uint32_t nz_;
  std::uint32_t d_;
  std::uint32_t gamma_star_;
  std::uint64_t total_samples_;
  std::uint64_t samples_done_{0};
  std::vector<Slot> queue_; // ring buffer, head_ = band about to be served
  std::size_t head_{0};
};

} // namespace hec

#endif
