// Copyright 2026 The iqrdenoise Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef IQRDENOISE_NOISE_MODEL_H_
#define IQRDENOISE_NOISE_MODEL_H_

#include <cstdint>
#include <limits>

#include "iqrdenoise/image.h"
#include "iqrdenoise/iqr_filter.h"

namespace iqrdenoise {

// xorshift64* (Vigna). The shift triple and multiplier are fixed so noise
// fixtures are reproducible bit-for-bit in any language:
//
//   s ^= s >> 12; s ^= s << 25; s ^= s >> 27; return s * 0x2545F4914F6CDD1D;
//
// A zero seed (a fixed point of the shifts) is replaced by kZeroSeedSubstitute.
class XorShift64Star {
 public:
  using result_type = std::uint64_t;

  static constexpr std::uint64_t kZeroSeedSubstitute = 0x9E3779B97F4A7C15ULL;
  static constexpr std::uint64_t kMultiplier = 0x2545F4914F6CDD1DULL;

  explicit XorShift64Star(std::uint64_t seed)
      : state_(seed == 0 ? kZeroSeedSubstitute : seed) {}

  std::uint64_t operator()() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * kMultiplier;
  }

  std::uint64_t state() const { return state_; }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

 private:
  std::uint64_t state_;
};

struct NoiseSpec {
  double density = 0.0;  // probability in [0, 1] that a pixel is corrupted
  std::uint64_t seed = 0;

  // Throws Error(kInvalidArgument).
  void Validate() const;
};

struct NoisyImage {
  GrayImage image;
  NoiseMask corrupted;  // true where an impulse was written
};

// Row-major scan with two draws per pixel: the first decides corruption
// (draw / 2^64 < density), the low bit of the second picks pepper (0) or
// salt (255). A pixel that already held the impulse value still counts as
// corrupted.
NoisyImage AddSaltPepperWithMask(const GrayImage& img, const NoiseSpec& spec);

GrayImage AddSaltPepper(const GrayImage& img, const NoiseSpec& spec);

// Per-image seed for corpus runs: the first output of XorShift64Star seeded
// with (seed XOR index).
std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t index);

}  // namespace iqrdenoise

#endif  // IQRDENOISE_NOISE_MODEL_H_
