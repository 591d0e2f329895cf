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

#include "iqrdenoise/iqr_filter.h"

#include <algorithm>
#include <string>

#include "iqrdenoise/error.h"
#include "iqrdenoise/order_stats.h"

namespace iqrdenoise {
namespace {

void CheckCoord(const GrayImage& img, PixelCoord p) {
  if (!img.Contains(p)) {
    throw Error(ErrorCode::kOutOfBounds,
                "pixel (" + std::to_string(p.row) + "," +
                    std::to_string(p.col) + ") outside " +
                    std::to_string(img.width()) + "x" +
                    std::to_string(img.height()));
  }
}

void CheckMask(const GrayImage& img, const NoiseMask& mask) {
  if (!mask.Matches(img)) {
    throw Error(ErrorCode::kDimensionMismatch,
                "mask " + std::to_string(mask.width()) + "x" +
                    std::to_string(mask.height()) + " vs image " +
                    std::to_string(img.width()) + "x" +
                    std::to_string(img.height()));
  }
}

// Neighbor mean over pixels clean in `pending`, rounded half away from zero.
std::optional<std::uint8_t> CleanNeighborMean(const GrayImage& img,
                                              const NoiseMask& pending,
                                              PixelCoord p) {
  unsigned sum = 0;
  unsigned count = 0;
  const int r0 = std::max(p.row - 1, 0);
  const int r1 = std::min(p.row + 1, img.height() - 1);
  const int c0 = std::max(p.col - 1, 0);
  const int c1 = std::min(p.col + 1, img.width() - 1);
  for (int r = r0; r <= r1; ++r) {
    for (int c = c0; c <= c1; ++c) {
      if ((r == p.row && c == p.col) || pending.flagged(r, c)) continue;
      sum += img(r, c);
      ++count;
    }
  }
  if (count == 0) return std::nullopt;
  return static_cast<std::uint8_t>((2 * sum + count) / (2 * count));
}

std::uint8_t FallbackValue(const GrayImage& img, const NoiseMask& mask,
                           Fallback fallback) {
  if (fallback == Fallback::kMidGray) return kMidGray;
  std::vector<std::uint8_t> clean;
  clean.reserve(img.size());
  for (int r = 0; r < img.height(); ++r) {
    for (int c = 0; c < img.width(); ++c) {
      if (!mask.flagged(r, c)) clean.push_back(img(r, c));
    }
  }
  return clean.empty() ? kMidGray : MedianOf(clean);
}

}  // namespace

void FilterConfig::Validate() const {
  if (window_k < 2) {
    throw Error(ErrorCode::kWindowTooSmall,
                "window must be at least 2, got " + std::to_string(window_k));
  }
  // Negated comparisons also reject NaN.
  if (!(t1 >= 0.0) || !(t2 >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "thresholds must be non-negative");
  }
}

NoiseMask::NoiseMask(int width, int height)
    : width_(width), height_(height) {
  if (width < 1 || height < 1) {
    throw Error(ErrorCode::kInvalidArgument, "mask dimensions must be positive");
  }
  flags_.assign(static_cast<std::size_t>(width) * height, 0);
}

std::size_t NoiseMask::Count() const {
  return static_cast<std::size_t>(
      std::count(flags_.begin(), flags_.end(), std::uint8_t{1}));
}

std::vector<PixelCoord> NoiseMask::FlaggedCoords() const {
  std::vector<PixelCoord> out;
  for (int r = 0; r < height_; ++r) {
    for (int c = 0; c < width_; ++c) {
      if (flagged(r, c)) out.push_back({r, c});
    }
  }
  return out;
}

std::vector<PixelCoord> DetectTile(std::span<const TilePixel> tile,
                                   const FilterConfig& cfg) {
  if (tile.empty()) {
    throw Error(ErrorCode::kEmptyTile, "tile has no pixels");
  }
  std::vector<std::uint8_t> values;
  values.reserve(tile.size());
  for (const auto& px : tile) values.push_back(px.value);
  const Quartiles q = ComputeQuartiles(values);

  std::vector<PixelCoord> flagged;
  for (const auto& px : tile) {
    const double v = px.value;
    const bool left = v < q.q1 && q.q1 - v >= cfg.t1;
    const bool right = v > q.q3 && v - q.q3 >= cfg.t2;
    if (left || right) flagged.push_back(px.coord);
  }
  return flagged;
}

NoiseMask Detect(const GrayImage& img, const FilterConfig& cfg) {
  cfg.Validate();
  const int k = cfg.window_k;
  NoiseMask mask(img.width(), img.height());
  std::vector<TilePixel> tile;
  tile.reserve(static_cast<std::size_t>(k) * k);
  for (int top = 0; top < img.height(); top += k) {
    const int bottom = std::min(top + k, img.height());
    for (int left = 0; left < img.width(); left += k) {
      const int right = std::min(left + k, img.width());
      tile.clear();
      for (int r = top; r < bottom; ++r) {
        for (int c = left; c < right; ++c) {
          tile.push_back({{r, c}, img(r, c)});
        }
      }
      for (const PixelCoord& p : DetectTile(tile, cfg)) mask.Set(p, true);
    }
  }
  return mask;
}

PixelClass ClassifyPosition(const GrayImage& img, PixelCoord p) {
  CheckCoord(img, p);
  if (img.width() < 2 || img.height() < 2) {
    throw Error(ErrorCode::kDegenerateImage,
                "position classes need an image of at least 2x2");
  }
  const bool row_edge = p.row == 0 || p.row == img.height() - 1;
  const bool col_edge = p.col == 0 || p.col == img.width() - 1;
  if (row_edge && col_edge) return PixelClass::kCorner;
  if (row_edge || col_edge) return PixelClass::kBorder;
  return PixelClass::kInterior;
}

std::optional<std::uint8_t> EstimatePixel(const GrayImage& img,
                                          const NoiseMask& mask, PixelCoord p) {
  CheckMask(img, mask);
  CheckCoord(img, p);
  if (!mask[p]) {
    throw Error(ErrorCode::kNotFlagged,
                "pixel (" + std::to_string(p.row) + "," +
                    std::to_string(p.col) + ") is not flagged");
  }
  return CleanNeighborMean(img, mask, p);
}

GrayImage Repair(const GrayImage& img, const NoiseMask& mask,
                 const FilterConfig& cfg) {
  CheckMask(img, mask);
  GrayImage out = img;
  NoiseMask pending = mask;
  std::vector<PixelCoord> remaining = mask.FlaggedCoords();

  struct Resolved {
    PixelCoord coord;
    std::uint8_t value;
  };
  std::vector<Resolved> resolved;
  std::vector<PixelCoord> deferred;

  while (!remaining.empty()) {
    // `out` is not written until the pass completes, so every estimate in a
    // pass reads the same snapshot.
    resolved.clear();
    deferred.clear();
    for (const PixelCoord& p : remaining) {
      if (const auto value = CleanNeighborMean(out, pending, p)) {
        resolved.push_back({p, *value});
      } else {
        deferred.push_back(p);
      }
    }
    if (resolved.empty()) {
      const std::uint8_t fill = FallbackValue(img, mask, cfg.fallback);
      for (const PixelCoord& p : remaining) out[p] = fill;
      break;
    }
    for (const auto& [p, value] : resolved) {
      out[p] = value;
      pending.Set(p, false);
    }
    remaining.swap(deferred);
  }
  return out;
}

GrayImage DenoiseIqr(const GrayImage& img, const FilterConfig& cfg) {
  if (img.width() < 2 || img.height() < 2) {
    throw Error(ErrorCode::kDegenerateImage,
                "IQR filter needs an image of at least 2x2");
  }
  return Repair(img, Detect(img, cfg), cfg);
}

}  // namespace iqrdenoise
