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

#ifndef IQRDENOISE_METRICS_H_
#define IQRDENOISE_METRICS_H_

#include "iqrdenoise/image.h"

namespace iqrdenoise {

inline constexpr double kPeakValue = 255.0;

struct PsnrResult {
  double mse = 0.0;
  // 10 * log10(255^2 / mse); +infinity when mse == 0.
  double psnr_db = 0.0;

  bool infinite() const { return mse == 0.0; }
};

// Throws Error(kDimensionMismatch).
PsnrResult Psnr(const GrayImage& a, const GrayImage& b);

}  // namespace iqrdenoise

#endif  // IQRDENOISE_METRICS_H_
