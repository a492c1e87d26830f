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

#include "hec/acss.hpp"

#include "hec/errors.hpp"

namespace hec {

AcssOutput update_statistics(std::uint64_t sigma_prev, std::uint64_t gamma_prev,
                             std::uint64_t delta, std::uint32_t gamma_star) {
  const std::uint64_t saturated = (std::uint64_t{1} << gamma_star) - 1;
  if (gamma_prev == 0 || gamma_prev > saturated) {
    throw InternalError("counter value " + std::to_string(gamma_prev) + " outside [1, 2^" +
                        std::to_string(gamma_star) + "-1]");
  }
  const std::uint64_t sum = sigma_prev + 4 * delta;
  if (gamma_prev < saturated) {
    return {sum, gamma_prev + 1, false, 0};
  }
  return {(sum + 1) >> 1, (gamma_prev + 1) >> 1, true, static_cast<std::uint32_t>(sum & 1U)};
}

AcssState::AcssState(const CoderParams &params, std::uint64_t initial_sigma)
    : nz_(params.nz), d_(params.d), gamma_star_(params.gamma_star),
      total_samples_(params.samples()) {
  if (nz_ == 0) {
    throw ConfigError("nz must be positive");
  }
  if (params.gamma0 >= params.gamma_star) {
    throw ConfigError("gamma0 must be below gamma_star");
  }
  if (initial_sigma >> params.accumulator_bits() != 0) {
    throw ConfigError("initial accumulator " + std::to_string(initial_sigma) + " exceeds " +
                      std::to_string(params.accumulator_bits()) + " bits");
  }
  queue_.assign(nz_, Slot{initial_sigma, std::uint64_t{1} << params.gamma0});
}

AcssState::AcssState(const CoderParams &params, std::span<const std::uint64_t> sigma,
                     std::uint64_t gamma, std::uint64_t samples_done)
    : nz_(params.nz), d_(params.d), gamma_star_(params.gamma_star),
      total_samples_(params.samples()), samples_done_(samples_done) {
  if (nz_ == 0 || sigma.size() != nz_) {
    throw ConfigError("injected state needs exactly nz accumulators");
  }
  if (gamma == 0 || gamma >= (std::uint64_t{1} << gamma_star_)) {
    throw ConfigError("injected counter outside [1, 2^gamma_star-1]");
  }
  if (samples_done % nz_ != 0 || samples_done > total_samples_) {
    throw ConfigError("injected state must sit on a position boundary inside the image");
  }
  queue_.reserve(nz_);
  for (const auto s : sigma) {
    if (s >> params.accumulator_bits() != 0) {
      throw ConfigError("injected accumulator " + std::to_string(s) + " exceeds " +
                        std::to_string(params.accumulator_bits()) + " bits");
    }
    queue_.push_back({s, gamma});
  }
}

AcssOutput AcssState::update(std::uint64_t delta) {
  if (samples_done_ >= total_samples_) {
    throw InternalError("statistics update past end of image");
  }
  if (d_ < 64 && (delta >> d_) != 0) {
    throw ConfigError("mapped index " + std::to_string(delta) + " does not fit in " +
                      std::to_string(d_) + " bits");
  }
  Slot &slot = queue_[head_];
  AcssOutput out;
  if (samples_done_ < nz_) {
    out = {slot.sigma, slot.gamma, false, 0};
  } else {
    out = update_statistics(slot.sigma, slot.gamma, delta, gamma_star_);
    if (out.sigma >> (2 + d_ + gamma_star_) != 0) {
      throw InternalError("accumulator overflowed " + std::to_string(2 + d_ + gamma_star_) +
                          " bits");
    }
    slot = {out.sigma, out.gamma};
  }
  head_ = head_ + 1 == nz_ ? 0 : head_ + 1;
  ++samples_done_;
  return out;
}

std::vector<std::uint64_t> AcssState::drain_final_accumulators() const {
  if (!end_of_image()) {
    throw InternalError("final accumulators requested before end of image");
  }
  // samples_done_ is a multiple of nz_ here, so head_ is band 0.
  std::vector<std::uint64_t> out;
  out.reserve(nz_);
  for (std::uint32_t z = 0; z < nz_; ++z) {
    out.push_back(queue_[(head_ + z) % nz_].sigma);
  }
  return out;
}

} // namespace hec
