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

#ifndef IQRDENOISE_MEDIAN_FILTER_H_
#define IQRDENOISE_MEDIAN_FILTER_H_

#include "iqrdenoise/image.h"

namespace iqrdenoise {

// Centered k x k median with edge replication at the borders. Output has the
// input's dimensions.
//
// Throws Error(kEvenWindow) for even k, Error(kWindowTooSmall) for k < 3.
GrayImage DenoiseMedian(const GrayImage& img, int k);

}  // namespace iqrdenoise

#endif  // IQRDENOISE_MEDIAN_FILTER_H_
