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

#ifndef IQRDENOISE_IMAGE_H_
#define IQRDENOISE_IMAGE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace iqrdenoise {

// Zero-based raster position.
struct PixelCoord {
  int row = 0;
  int col = 0;

  friend bool operator==(const PixelCoord&, const PixelCoord&) = default;
  friend auto operator<=>(const PixelCoord&, const PixelCoord&) = default;
};

// Width x height raster of 8-bit intensities stored row-major with the origin
// at the top-left. Dimensions are always at least 1x1.
class GrayImage {
 public:
  // Throws Error(kInvalidArgument) for non-positive dimensions.
  GrayImage(int width, int height, std::uint8_t fill = 0);
  // Throws Error(kDimensionMismatch) unless pixels.size() == width * height.
  GrayImage(int width, int height, std::vector<std::uint8_t> pixels);

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t size() const { return pixels_.size(); }

  bool Contains(PixelCoord p) const {
    return p.row >= 0 && p.row < height_ && p.col >= 0 && p.col < width_;
  }
  std::size_t IndexOf(PixelCoord p) const {
    return static_cast<std::size_t>(p.row) * width_ + p.col;
  }

  // Unchecked accessors.
  std::uint8_t operator()(int row, int col) const {
    return pixels_[static_cast<std::size_t>(row) * width_ + col];
  }
  std::uint8_t& operator()(int row, int col) {
    return pixels_[static_cast<std::size_t>(row) * width_ + col];
  }
  std::uint8_t operator[](PixelCoord p) const { return pixels_[IndexOf(p)]; }
  std::uint8_t& operator[](PixelCoord p) { return pixels_[IndexOf(p)]; }

  // Checked accessor; throws Error(kOutOfBounds).
  std::uint8_t at(PixelCoord p) const;

  std::span<const std::uint8_t> pixels() const { return pixels_; }
  std::span<std::uint8_t> mutable_pixels() { return pixels_; }

  bool SameShape(const GrayImage& other) const {
    return width_ == other.width_ && height_ == other.height_;
  }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  int width_;
  int height_;
  std::vector<std::uint8_t> pixels_;
};

// In-bounds coordinates at Chebyshev distance 1 from `p`, in row-major offset
// order. Yields 3/5/8 entries for corner/border/interior pixels of images that
// are at least 2x2, fewer for degenerate 1xN images.
// Throws Error(kOutOfBounds) if `p` is not inside the image.
std::vector<PixelCoord> Neighbors8(const GrayImage& img, PixelCoord p);

}  // namespace iqrdenoise

#endif  // IQRDENOISE_IMAGE_H_
