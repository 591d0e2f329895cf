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

#include <benchmark/benchmark.h>

#include "iqrdenoise/iqrdenoise.h"

namespace iqrdenoise {
namespace {

GrayImage NoisyGradient(int size) {
  return AddSaltPepper(TrendCorpus(size)[2].image, {0.1, 1});
}

void BM_DenoiseIqr(benchmark::State& state) {
  const GrayImage img = NoisyGradient(512);
  FilterConfig cfg;
  cfg.window_k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(DenoiseIqr(img, cfg));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(img.size()));
}
BENCHMARK(BM_DenoiseIqr)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_DenoiseMedian(benchmark::State& state) {
  const GrayImage img = NoisyGradient(512);
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(DenoiseMedian(img, k));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(img.size()));
}
BENCHMARK(BM_DenoiseMedian)->Arg(3)->Arg(5)->Arg(7)->Arg(15)->Unit(benchmark::kMillisecond);

void BM_AddSaltPepper(benchmark::State& state) {
  const GrayImage img = TrendCorpus(512)[0].image;
  for (auto _ : state) benchmark::DoNotOptimize(AddSaltPepper(img, {0.1, 7}));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(img.size()));
}
BENCHMARK(BM_AddSaltPepper)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace iqrdenoise
