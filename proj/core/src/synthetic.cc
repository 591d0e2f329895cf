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

#include "iqrdenoise/synthetic.h"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <utility>

#include "iqrdenoise/error.h"

namespace iqrdenoise {
namespace {

constexpr std::array<std::pair<Pattern, std::string_view>, 6> kPatternNames{{
    {Pattern::kFlat, "flat"},
    {Pattern::kStepEdge, "step"},
    {Pattern::kSteps, "steps"},
    {Pattern::kCheckerboard, "checker"},
    {Pattern::kRamp, "ramp"},
    {Pattern::kTriangle, "gradient"},
}};

void Require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::kInvalidArgument, what);
}

bool IsIntensity(int v) { return v >= 0 && v <= 255; }

std::uint8_t Clamp8(int v) { return static_cast<std::uint8_t>(std::clamp(v, 0, 255)); }

}  // namespace

GrayImage Generate(const SyntheticSpec& spec) {
  Require(spec.width >= 1 && spec.height >= 1, "dimensions must be positive");
  Require(IsIntensity(spec.value) && IsIntensity(spec.low) &&
              IsIntensity(spec.high) && IsIntensity(spec.base),
          "intensities must be in [0, 255]");
  GrayImage img(spec.width, spec.height);
  const int w = spec.width;
  const int h = spec.height;
  switch (spec.pattern) {
    case Pattern::kFlat:
      std::fill(img.mutable_pixels().begin(), img.mutable_pixels().end(),
                static_cast<std::uint8_t>(spec.value));
      break;
    case Pattern::kStepEdge:
      for (int r = 0; r < h; ++r)
        for (int c = 0; c < w; ++c)
          img(r, c) = static_cast<std::uint8_t>(c < w / 2 ? spec.low : spec.high);
      break;
    case Pattern::kSteps:
      Require(spec.cell >= 1, "cell must be positive");
      Require(spec.levels >= 1, "levels must be positive");
      for (int r = 0; r < h; ++r)
        for (int c = 0; c < w; ++c)
          img(r, c) = Clamp8(spec.base +
                             spec.col_step * ((c / spec.cell) % spec.levels) +
                             spec.row_step * ((r / spec.cell) % spec.levels));
      break;
    case Pattern::kCheckerboard:
      Require(spec.cell >= 1, "cell must be positive");
      for (int r = 0; r < h; ++r)
        for (int c = 0; c < w; ++c)
          img(r, c) = static_cast<std::uint8_t>(
              (r / spec.cell + c / spec.cell) % 2 == 0 ? spec.low : spec.high);
      break;
    case Pattern::kRamp:
      for (int r = 0; r < h; ++r)
        for (int c = 0; c < w; ++c)
          img(r, c) = static_cast<std::uint8_t>(
              w == 1 ? spec.low
                     : spec.low + (spec.high - spec.low) * c / (w - 1));
      break;
    case Pattern::kTriangle: {
      Require(spec.period >= 1, "period must be positive");
      const int p = spec.period;
      // |2(x mod p) - p| runs p..0..p over one period.
      for (int r = 0; r < h; ++r) {
        const int dy = std::abs(2 * (r % p) - p);
        for (int c = 0; c < w; ++c) {
          const int dx = std::abs(2 * (c % p) - p);
          img(r, c) = Clamp8(spec.low + (spec.high - spec.low) * (dx + dy) / (2 * p));
        }
      }
      break;
    }
  }
  return img;
}

std::string_view PatternName(Pattern pattern) {
  for (const auto& [p, name] : kPatternNames) {
    if (p == pattern) return name;
  }
  return "unknown";
}

std::optional<Pattern> ParsePattern(std::string_view name) {
  for (const auto& [p, n] : kPatternNames) {
    if (n == name) return p;
  }
  return std::nullopt;
}

std::vector<NamedImage> TrendCorpus(int size) {
  SyntheticSpec checker;
  checker.pattern = Pattern::kCheckerboard;
  checker.width = checker.height = size;
  checker.cell = 8;
  checker.low = 60;
  checker.high = 190;

  SyntheticSpec steps;
  steps.pattern = Pattern::kSteps;
  steps.width = steps.height = size;
  steps.cell = 8;
  steps.base = 40;
  steps.col_step = 40;
  steps.row_step = 20;
  steps.levels = 4;

  SyntheticSpec gradient;
  gradient.pattern = Pattern::kTriangle;
  gradient.width = gradient.height = size;
  gradient.period = 12;
  gradient.low = 30;
  gradient.high = 225;

  std::vector<NamedImage> corpus;
  corpus.push_back({"checkerboard", Generate(checker)});
  corpus.push_back({"steps", Generate(steps)});
  corpus.push_back({"gradient", Generate(gradient)});
  return corpus;
}

}  // namespace iqrdenoise
