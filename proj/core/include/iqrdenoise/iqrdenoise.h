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

#ifndef IQRDENOISE_IQRDENOISE_H_
#define IQRDENOISE_IQRDENOISE_H_

#include "iqrdenoise/bench.h"
#include "iqrdenoise/error.h"
#include "iqrdenoise/image.h"
#include "iqrdenoise/iqr_filter.h"
#include "iqrdenoise/median_filter.h"
#include "iqrdenoise/metrics.h"
#include "iqrdenoise/noise_model.h"
#include "iqrdenoise/order_stats.h"
#include "iqrdenoise/pgm.h"
#include "iqrdenoise/synthetic.h"

#endif  // IQRDENOISE_IQRDENOISE_H_
