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

#include "iqrdenoise/bench.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <ostream>
#include <set>
#include <thread>
#include <tuple>

#include "iqrdenoise/error.h"
#include "iqrdenoise/median_filter.h"
#include "iqrdenoise/metrics.h"
#include "iqrdenoise/noise_model.h"
#include "iqrdenoise/pgm.h"

namespace iqrdenoise {
namespace {

template <typename F>
double TimeMs(F&& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

std::vector<BenchRecord> BenchOneImage(const NamedImage& input,
                                       std::size_t index,
                                       const BenchConfig& cfg) {
  const std::uint64_t seed = DeriveSeed(cfg.seed, index);
  const GrayImage noisy = AddSaltPepper(input.image, {cfg.density, seed});
  const double noisy_db = Psnr(noisy, input.image).psnr_db;

  std::vector<BenchRecord> records;
  for (const int k : cfg.windows) {
    for (const FilterKind kind : {FilterKind::kIqr, FilterKind::kMedian}) {
      std::optional<GrayImage> filtered;
      const double ms = TimeMs([&] {
        if (kind == FilterKind::kIqr) {
          filtered = DenoiseIqr(noisy, {k, cfg.t1, cfg.t2, cfg.fallback});
        } else {
          filtered = DenoiseMedian(noisy, k);
        }
      });
      BenchRecord rec;
      rec.image_id = input.id;
      rec.filter = kind;
      rec.window_k = k;
      rec.density = cfg.density;
      rec.seed = seed;
      rec.psnr_filtered_db = Psnr(*filtered, input.image).psnr_db;
      rec.psnr_noisy_db = noisy_db;
      rec.wall_ms = ms;
      records.push_back(std::move(rec));
    }
  }
  return records;
}

}  // namespace

std::string_view FilterName(FilterKind kind) {
  return kind == FilterKind::kIqr ? "iqr" : "median";
}

std::optional<FilterKind> ParseFilter(std::string_view name) {
  if (name == "iqr") return FilterKind::kIqr;
  if (name == "median") return FilterKind::kMedian;
  return std::nullopt;
}

std::string_view FallbackName(Fallback fallback) {
  return fallback == Fallback::kMidGray ? "midgray" : "cleanmedian";
}

std::optional<Fallback> ParseFallback(std::string_view name) {
  if (name == "midgray") return Fallback::kMidGray;
  if (name == "cleanmedian") return Fallback::kGlobalCleanMedian;
  return std::nullopt;
}

void BenchConfig::Validate() const {
  if (windows.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "window sweep is empty");
  }
  for (const int k : windows) {
    if (k < 3) {
      throw Error(ErrorCode::kWindowTooSmall,
                  "window " + std::to_string(k) + " is below 3");
    }
    if (k % 2 == 0) {
      throw Error(ErrorCode::kEvenWindow,
                  "window " + std::to_string(k) + " is even");
    }
  }
  if (std::set<int>(windows.begin(), windows.end()).size() != windows.size()) {
    throw Error(ErrorCode::kInvalidArgument, "window sweep has duplicates");
  }
  NoiseSpec{density, seed}.Validate();
  FilterConfig{windows.front(), t1, t2, fallback}.Validate();
  if (threads < 1) {
    throw Error(ErrorCode::kInvalidArgument, "threads must be at least 1");
  }
}

std::vector<NamedImage> LoadBenchInputs(
    std::span<const std::filesystem::path> paths) {
  if (paths.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no input images");
  }
  std::vector<NamedImage> images;
  std::set<std::string> ids;
  for (const auto& path : paths) {
    std::string id = path.stem().string();
    if (!ids.insert(id).second) {
      throw Error(ErrorCode::kInvalidArgument, "duplicate image id " + id);
    }
    images.push_back({std::move(id), ReadPgmFile(path)});
  }
  return images;
}

std::vector<BenchRecord> RunBench(std::span<const NamedImage> images,
                                  const BenchConfig& cfg) {
  cfg.Validate();
  std::vector<std::vector<BenchRecord>> per_image(images.size());

  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(cfg.threads), images.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < images.size(); ++i) {
      per_image[i] = BenchOneImage(images[i], i, cfg);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    {
      std::vector<std::jthread> pool;
      for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
          for (std::size_t i = next++; i < images.size(); i = next++) {
            try {
              per_image[i] = BenchOneImage(images[i], i, cfg);
            } catch (...) {
              std::lock_guard lock(failure_mu);
              if (!failure) failure = std::current_exception();
            }
          }
        });
      }
    }
    if (failure) std::rethrow_exception(failure);
  }

  std::vector<BenchRecord> records;
  for (auto& chunk : per_image) {
    std::move(chunk.begin(), chunk.end(), std::back_inserter(records));
  }
  std::sort(records.begin(), records.end(),
            [](const BenchRecord& a, const BenchRecord& b) {
              return std::make_tuple(std::string_view(a.image_id),
                                     FilterName(a.filter), a.window_k) <
                     std::make_tuple(std::string_view(b.image_id),
                                     FilterName(b.filter), b.window_k);
            });
  return records;
}

std::string FormatDb(double db) {
  if (std::isinf(db)) return db > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", db);
  return buf;
}

void WriteBenchCsv(std::ostream& out, std::span<const BenchRecord> records) {
  out << kBenchCsvHeader << '\n';
  char density[32];
  char wall[32];
  for (const auto& r : records) {
    std::snprintf(density, sizeof(density), "%g", r.density);
    std::snprintf(wall, sizeof(wall), "%.3f", r.wall_ms);
    out << r.image_id << ',' << FilterName(r.filter) << ',' << r.window_k << ','
        << density << ',' << r.seed << ',' << FormatDb(r.psnr_filtered_db)
        << ',' << FormatDb(r.psnr_noisy_db) << ',' << wall << '\n';
  }
}

std::vector<BenchRecord> RunBenchToFile(const BenchConfig& cfg) {
  cfg.Validate();
  const auto images = LoadBenchInputs(cfg.inputs);
  auto records = RunBench(images, cfg);
  std::ofstream out(cfg.output, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::kIo, "cannot open " + cfg.output.string());
  }
  WriteBenchCsv(out, records);
  if (!out) {
    throw Error(ErrorCode::kIo, "write failed: " + cfg.output.string());
  }
  return records;
}

}  // namespace iqrdenoise
