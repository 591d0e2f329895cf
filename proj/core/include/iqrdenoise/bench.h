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

#ifndef IQRDENOISE_BENCH_H_
#define IQRDENOISE_BENCH_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "iqrdenoise/iqr_filter.h"
#include "iqrdenoise/synthetic.h"

namespace iqrdenoise {

enum class FilterKind { kIqr, kMedian };

std::string_view FilterName(FilterKind kind);
std::optional<FilterKind> ParseFilter(std::string_view name);

// "midgray" / "cleanmedian".
std::string_view FallbackName(Fallback fallback);
std::optional<Fallback> ParseFallback(std::string_view name);

// One row of the window-size comparison table.
struct BenchRecord {
  std::string image_id;
  FilterKind filter = FilterKind::kIqr;
  int window_k = 0;
  double density = 0.0;
  std::uint64_t seed = 0;         // seed actually used to corrupt this image
  double psnr_filtered_db = 0.0;  // filtered vs clean; +inf if identical
  double psnr_noisy_db = 0.0;     // noisy vs clean
  double wall_ms = 0.0;           // filter time only, informational
};

struct BenchConfig {
  std::vector<std::filesystem::path> inputs;
  std::vector<int> windows{3, 5, 7};
  double density = 0.1;
  std::uint64_t seed = 1;
  double t1 = kDefaultThreshold;
  double t2 = kDefaultThreshold;
  Fallback fallback = Fallback::kGlobalCleanMedian;
  std::filesystem::path output;
  int threads = 1;  // images processed concurrently

  // Checks every parameter except `inputs`/`output`. Windows must be odd and
  // >= 3 because both filters run at every size.
  void Validate() const;
};

// Reads every input before any processing starts; the image id is the file
// stem. Throws Error(kIo) / PGM errors, or Error(kInvalidArgument) for an
// empty input list or duplicate ids.
std::vector<NamedImage> LoadBenchInputs(
    std::span<const std::filesystem::path> paths);

// For each image (at index i), corrupts it once with DeriveSeed(cfg.seed, i)
// and runs both filters at every window size. Records are sorted by
// (image_id, filter name, window_k).
std::vector<BenchRecord> RunBench(std::span<const NamedImage> images,
                                  const BenchConfig& cfg);

inline constexpr std::string_view kBenchCsvHeader =
    "image_id,filter,window_k,density,seed,psnr_filtered_db,psnr_noisy_db,"
    "wall_ms";

// "inf" for infinite PSNR, otherwise four decimals.
std::string FormatDb(double db);

void WriteBenchCsv(std::ostream& out, std::span<const BenchRecord> records);

// LoadBenchInputs + RunBench + WriteBenchCsv to cfg.output. Nothing is
// written if any input fails to load.
std::vector<BenchRecord> RunBenchToFile(const BenchConfig& cfg);

}  // namespace iqrdenoise

#endif  // IQRDENOISE_BENCH_H_
