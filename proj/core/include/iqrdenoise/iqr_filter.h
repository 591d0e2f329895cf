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

#ifndef IQRDENOISE_IQR_FILTER_H_
#define IQRDENOISE_IQR_FILTER_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "iqrdenoise/image.h"

namespace iqrdenoise {

// Value written to pixels that cannot be estimated from any clean neighbor.
enum class Fallback {
  kMidGray,            // 128
  kGlobalCleanMedian,  // median of never-flagged pixels, 128 if none
};

inline constexpr double kDefaultThreshold = 30.0;
inline constexpr std::uint8_t kMidGray = 128;

struct FilterConfig {
  int window_k = 3;                 // tile side, >= 2
  double t1 = kDefaultThreshold;    // minimum distance below q1 to flag
  double t2 = kDefaultThreshold;    // minimum distance above q3 to flag
  Fallback fallback = Fallback::kGlobalCleanMedian;

  // Throws Error(kWindowTooSmall) or Error(kInvalidArgument).
  void Validate() const;
};

// Per-pixel noisy flags for an image of the same shape.
class NoiseMask {
 public:
  NoiseMask(int width, int height);

  int width() const { return width_; }
  int height() const { return height_; }

  bool operator[](PixelCoord p) const { return flags_[Index(p)] != 0; }
  bool flagged(int row, int col) const {
    return flags_[static_cast<std::size_t>(row) * width_ + col] != 0;
  }
  void Set(PixelCoord p, bool noisy) { flags_[Index(p)] = noisy ? 1 : 0; }

  std::size_t Count() const;
  bool Empty() const { return Count() == 0; }
  bool Matches(const GrayImage& img) const {
    return img.width() == width_ && img.height() == height_;
  }
  std::vector<PixelCoord> FlaggedCoords() const;

  friend bool operator==(const NoiseMask&, const NoiseMask&) = default;

 private:
  std::size_t Index(PixelCoord p) const {
    return static_cast<std::size_t>(p.row) * width_ + p.col;
  }

  int width_;
  int height_;
  std::vector<std::uint8_t> flags_;
};

enum class PixelClass { kCorner, kBorder, kInterior };

struct TilePixel {
  PixelCoord coord;
  std::uint8_t value = 0;
};

// Flags the pixels of one tile that lie strictly outside [q1, q3] and are at
// least t1 below q1 or at least t2 above q3. Returned in input order.
//
// Throws Error(kEmptyTile).
std::vector<PixelCoord> DetectTile(std::span<const TilePixel> tile,
                                   const FilterConfig& cfg);

// Runs DetectTile over non-overlapping window_k x window_k tiles anchored at
// (0,0). Tiles on the right and bottom edges are clipped to the image.
NoiseMask Detect(const GrayImage& img, const FilterConfig& cfg);

// Throws Error(kOutOfBounds) or, for images narrower or shorter than 2 pixels,
// Error(kDegenerateImage).
PixelClass ClassifyPosition(const GrayImage& img, PixelCoord p);

// Rounded mean of the 8-neighbors of `p` not flagged in `mask`, or nullopt
// when every neighbor is flagged (the pixel is deferred to a later pass).
//
// Throws Error(kNotFlagged) if `p` is clean, Error(kDimensionMismatch) if the
// mask does not match `img`, Error(kOutOfBounds) for a bad coordinate.
std::optional<std::uint8_t> EstimatePixel(const GrayImage& img,
                                          const NoiseMask& mask, PixelCoord p);

// Replaces every flagged pixel by local averaging over clean neighbors.
//
// Pass 1 estimates all flagged pixels simultaneously from `img`. Each later
// pass treats pixels repaired so far as clean and retries the deferred ones,
// again reading a snapshot taken at the start of the pass. If a pass resolves
// nothing, the remaining pixels receive cfg.fallback. Unflagged pixels are
// copied unchanged.
//
// Throws Error(kDimensionMismatch).
GrayImage Repair(const GrayImage& img, const NoiseMask& mask,
                 const FilterConfig& cfg);

// Repair(img, Detect(img, cfg), cfg).
//
// Throws Error(kDegenerateImage) when width or height is below 2.
GrayImage DenoiseIqr(const GrayImage& img, const FilterConfig& cfg);

}  // namespace iqrdenoise

#endif  // IQRDENOISE_IQR_FILTER_H_
