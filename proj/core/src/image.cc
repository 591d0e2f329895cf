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

#include "iqrdenoise/image.h"

#include <string>
#include <utility>

#include "iqrdenoise/error.h"

namespace iqrdenoise {
namespace {

void CheckDimensions(int width, int height) {
  if (width < 1 || height < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "image dimensions must be positive, got " +
                    std::to_string(width) + "x" + std::to_string(height));
  }
}

std::string Describe(PixelCoord p) {
  return "(" + std::to_string(p.row) + "," + std::to_string(p.col) + ")";
}

}  // namespace

GrayImage::GrayImage(int width, int height, std::uint8_t fill)
    : width_(width), height_(height) {
  CheckDimensions(width, height);
  pixels_.assign(static_cast<std::size_t>(width) * height, fill);
}

GrayImage::GrayImage(int width, int height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  CheckDimensions(width, height);
  if (pixels_.size() != static_cast<std::size_t>(width) * height) {
    throw Error(ErrorCode::kDimensionMismatch,
                "expected " + std::to_string(width * height) +
                    " pixels, got " + std::to_string(pixels_.size()));
  }
}

std::uint8_t GrayImage::at(PixelCoord p) const {
  if (!Contains(p)) {
    throw Error(ErrorCode::kOutOfBounds, "pixel " + Describe(p));
  }
  return (*this)[p];
}

std::vector<PixelCoord> Neighbors8(const GrayImage& img, PixelCoord p) {
  if (!img.Contains(p)) {
    throw Error(ErrorCode::kOutOfBounds, "pixel " + Describe(p));
  }
  std::vector<PixelCoord> out;
  out.reserve(8);
  for (int dr = -1; dr <= 1; ++dr) {
    for (int dc = -1; dc <= 1; ++dc) {
      if (dr == 0 && dc == 0) continue;
      const PixelCoord q{p.row + dr, p.col + dc};
      if (img.Contains(q)) out.push_back(q);
    }
  }
  return out;
}

}  // namespace iqrdenoise
