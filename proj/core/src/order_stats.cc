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

#include "iqrdenoise/order_stats.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "iqrdenoise/error.h"

namespace iqrdenoise {
namespace {

// Value at 1-based fractional rank `rank` of the ascending sequence `sorted`.
double InterpolatedRank(const std::vector<std::uint8_t>& sorted, double rank) {
  const double n = static_cast<double>(sorted.size());
  rank = std::clamp(rank, 1.0, n);
  const double lower = std::floor(rank);
  const double upper = std::ceil(rank);
  const double lo = sorted[static_cast<std::size_t>(lower) - 1];
  const double hi = sorted[static_cast<std::size_t>(upper) - 1];
  return lo + (rank - lower) * (hi - lo);
}

}  // namespace

Quartiles ComputeQuartiles(std::span<const std::uint8_t> data) {
  if (data.empty()) {
    throw Error(ErrorCode::kEmptyData, "quartiles of an empty sample");
  }
  std::vector<std::uint8_t> sorted(data.begin(), data.end());
  std::sort(sorted.begin(), sorted.end());
  // (n+1)/4 is exact in binary floating point for any realistic n.
  const double n1 = static_cast<double>(sorted.size()) + 1.0;
  Quartiles q;
  q.q1 = InterpolatedRank(sorted, n1 / 4.0);
  q.q3 = InterpolatedRank(sorted, 3.0 * n1 / 4.0);
  q.iqr = q.q3 - q.q1;
  return q;
}

std::uint8_t MedianOf(std::span<const std::uint8_t> data) {
  if (data.empty()) {
    throw Error(ErrorCode::kEmptyData, "median of an empty sample");
  }
  std::vector<std::uint8_t> values(data.begin(), data.end());
  const std::size_t mid = values.size() / 2;
  std::nth_element(values.begin(), values.begin() + mid, values.end());
  const unsigned upper = values[mid];
  if (values.size() % 2 == 1) return static_cast<std::uint8_t>(upper);
  const unsigned lower = *std::max_element(values.begin(), values.begin() + mid);
  return static_cast<std::uint8_t>((lower + upper + 1) / 2);
}

}  // namespace iqrdenoise
