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

#include "iqrdenoise/metrics.h"

#include <cmath>
#include <cstdint>
#include <limits>

#include "iqrdenoise/error.h"

namespace iqrdenoise {

PsnrResult Psnr(const GrayImage& a, const GrayImage& b) {
  if (!a.SameShape(b)) {
    throw Error(ErrorCode::kDimensionMismatch, "PSNR needs equal-sized images");
  }
  // Exact integer accumulation; 255^2 * 2^30 pixels fits in 64 bits.
  std::uint64_t sse = 0;
  const auto pa = a.pixels();
  const auto pb = b.pixels();
  for (std::size_t i = 0; i < pa.size(); ++i) {
    const int d = static_cast<int>(pa[i]) - static_cast<int>(pb[i]);
    sse += static_cast<std::uint64_t>(d * d);
  }
  PsnrResult result;
  result.mse = static_cast<double>(sse) / static_cast<double>(pa.size());
  result.psnr_db = sse == 0
                       ? std::numeric_limits<double>::infinity()
                       : 10.0 * std::log10(kPeakValue * kPeakValue / result.mse);
  return result;
}

}  // namespace iqrdenoise
