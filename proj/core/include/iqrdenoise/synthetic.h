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

#ifndef IQRDENOISE_SYNTHETIC_H_
#define IQRDENOISE_SYNTHETIC_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "iqrdenoise/image.h"

namespace iqrdenoise {

// Deterministic test images. Every formula uses integer arithmetic only.
enum class Pattern {
  kFlat,          // value everywhere
  kStepEdge,      // low left of width/2, high from width/2 on
  kSteps,         // base + col_step*((c/cell)%levels) + row_step*((r/cell)%levels)
  kCheckerboard,  // low where (r/cell + c/cell) is even, else high
  kRamp,          // horizontal linear ramp low..high
  kTriangle,      // 2D triangle wave of the given period between low and high
};

struct SyntheticSpec {
  Pattern pattern = Pattern::kFlat;
  int width = 256;
  int height = 256;
  int value = 128;  // kFlat
  int low = 60;
  int high = 190;
  int cell = 8;     // kSteps, kCheckerboard
  int period = 12;  // kTriangle
  int base = 40;    // kSteps
  int col_step = 40;
  int row_step = 20;
  int levels = 4;
};

// Throws Error(kInvalidArgument) for out-of-range parameters.
GrayImage Generate(const SyntheticSpec& spec);

std::string_view PatternName(Pattern pattern);
std::optional<Pattern> ParsePattern(std::string_view name);

struct NamedImage {
  std::string id;
  GrayImage image;
};

// The three-image trend corpus: "checkerboard" (cell 8, 60/190), "steps"
// (cell 8, base 40, +40 per column cell, +20 per row cell, 4 levels) and
// "gradient" (triangle wave, period 12, 30..225).
std::vector<NamedImage> TrendCorpus(int size = 256);

}  // namespace iqrdenoise

#endif  // IQRDENOISE_SYNTHETIC_H_
