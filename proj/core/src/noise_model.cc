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

#include "iqrdenoise/noise_model.h"

#include <cmath>

#include "iqrdenoise/error.h"

namespace iqrdenoise {

void NoiseSpec::Validate() const {
  if (!(density >= 0.0 && density <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "density must be in [0, 1]");
  }
}

NoisyImage AddSaltPepperWithMask(const GrayImage& img, const NoiseSpec& spec) {
  spec.Validate();
  NoisyImage result{img, NoiseMask(img.width(), img.height())};
  XorShift64Star rng(spec.seed);
  // draw / 2^64 < density  <=>  draw < ceil(density * 2^64), evaluated
  // exactly: scaling by a power of two does not round.
  constexpr double kTwoTo64 = 0x1.0p64;
  const double bound = std::ceil(spec.density * kTwoTo64);
  const bool always = bound >= kTwoTo64;
  const std::uint64_t threshold =
      always ? 0 : static_cast<std::uint64_t>(bound);
  for (int r = 0; r < img.height(); ++r) {
    for (int c = 0; c < img.width(); ++c) {
      const std::uint64_t corrupt_draw = rng();
      const std::uint64_t polarity_draw = rng();
      if (always || corrupt_draw < threshold) {
        result.image(r, c) = (polarity_draw & 1) ? 255 : 0;
        result.corrupted.Set({r, c}, true);
      }
    }
  }
  return result;
}

GrayImage AddSaltPepper(const GrayImage& img, const NoiseSpec& spec) {
  return AddSaltPepperWithMask(img, spec).image;
}

std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t index) {
  XorShift64Star rng(seed ^ index);
  return rng();
}

}  // namespace iqrdenoise
