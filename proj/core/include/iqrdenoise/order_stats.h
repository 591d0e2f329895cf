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

#ifndef IQRDENOISE_ORDER_STATS_H_
#define IQRDENOISE_ORDER_STATS_H_

#include <cstdint>
#include <span>

namespace iqrdenoise {

// First and third quartile of a sample, kept real-valued.
struct Quartiles {
  double q1 = 0.0;
  double q3 = 0.0;
  double iqr = 0.0;  // q3 - q1
};

// Quartiles at ordered-observation ranks (n+1)/4 and 3(n+1)/4 (1-based),
// clamped to [1, n]. A fractional rank interpolates linearly between the two
// adjacent order statistics, so for [1, 2, 3, 4] the result is q1 = 1.25 and
// q3 = 3.75.
//
// Throws Error(kEmptyData) for an empty sample.
Quartiles ComputeQuartiles(std::span<const std::uint8_t> data);

// Median; for an even count, the mean of the two middle order statistics
// rounded half up.
//
// Throws Error(kEmptyData) for an empty sample.
std::uint8_t MedianOf(std::span<const std::uint8_t> data);

}  // namespace iqrdenoise

#endif  // IQRDENOISE_ORDER_STATS_H_
