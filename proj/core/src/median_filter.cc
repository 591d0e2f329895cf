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

#include "iqrdenoise/median_filter.h"

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "iqrdenoise/error.h"

namespace iqrdenoise {
namespace {

// Running 256-bin histogram over a window that slides one column at a time
// (Huang's algorithm). Columns are clamped, so replicated border samples are
// counted with their multiplicity.
class ColumnHistogram {
 public:
  void Clear() { bins_.fill(0); }

  void Add(int value, int delta) { bins_[value] += delta; }

  // The `rank`-th smallest sample, 1-based.
  std::uint8_t Select(int rank) const {
    int seen = 0;
    for (int v = 0; v < 256; ++v) {
      seen += bins_[v];
      if (seen >= rank) return static_cast<std::uint8_t>(v);
    }
    return 255;
  }

 private:
  std::array<int, 256> bins_{};
};

}  // namespace

GrayImage DenoiseMedian(const GrayImage& img, int k) {
  if (k < 3) {
    throw Error(ErrorCode::kWindowTooSmall,
                "median window must be at least 3, got " + std::to_string(k));
  }
  if (k % 2 == 0) {
    throw Error(ErrorCode::kEvenWindow,
                "median window must be odd, got " + std::to_string(k));
  }
  const int radius = k / 2;
  const int width = img.width();
  const int height = img.height();
  const int median_rank = (k * k + 1) / 2;

  std::vector<int> rows(k);
  auto clamp_col = [&](int c) { return std::clamp(c, 0, width - 1); };
  auto add_column = [&](ColumnHistogram& hist, int col, int delta) {
    const int c = clamp_col(col);
    for (int r : rows) hist.Add(img(r, c), delta);
  };

  GrayImage out(width, height);
  ColumnHistogram hist;
  for (int row = 0; row < height; ++row) {
    for (int i = 0; i < k; ++i) {
      rows[i] = std::clamp(row - radius + i, 0, height - 1);
    }
    hist.Clear();
    for (int col = -radius; col <= radius; ++col) add_column(hist, col, +1);
    out(row, 0) = hist.Select(median_rank);
    for (int col = 1; col < width; ++col) {
      add_column(hist, col - radius - 1, -1);
      add_column(hist, col + radius, +1);
      out(row, col) = hist.Select(median_rank);
    }
  }
  return out;
}

}  // namespace iqrdenoise
