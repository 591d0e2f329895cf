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

#ifndef IQRDENOISE_TESTS_ORACLES_ORACLES_H_
#define IQRDENOISE_TESTS_ORACLES_ORACLES_H_

// Brute-force reference implementations used only by tests. They operate on
// plain nested vectors of int and share no code with the library.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

namespace iqrdenoise::oracle {

using Grid = std::vector<std::vector<int>>;

// Ascending order by repeated minimum extraction.
inline std::vector<int> SelectionSorted(std::vector<int> v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::size_t best = i;
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (v[j] < v[best]) best = j;
    }
    std::swap(v[i], v[best]);
  }
  return v;
}

// Evaluates the piecewise-linear curve through (i, s_i), i = 1..n, at the
// rational rank num/den clamped to [1, n], by scanning every segment.
inline double InterpolatingRank(const std::vector<int>& data, long num,
                                long den) {
  const std::vector<int> s = SelectionSorted(data);
  const long n = static_cast<long>(s.size());
  if (num < den) num = den;           // rank < 1
  if (num > n * den) num = n * den;   // rank > n
  if (n == 1) return s[0];
  for (long i = 1; i < n; ++i) {
    // Segment [i, i+1] contains the rank iff i*den <= num <= (i+1)*den.
    if (i * den <= num && num <= (i + 1) * den) {
      const double t = static_cast<double>(num - i * den) / den;
      return s[i - 1] * (1.0 - t) + s[i] * t;
    }
  }
  return s[n - 1];
}

inline double Q1(const std::vector<int>& data) {
  return InterpolatingRank(data, static_cast<long>(data.size()) + 1, 4);
}
inline double Q3(const std::vector<int>& data) {
  return InterpolatingRank(data, 3 * (static_cast<long>(data.size()) + 1), 4);
}

inline int Median(const std::vector<int>& data) {
  std::vector<int> s = data;
  std::sort(s.begin(), s.end());
  const std::size_t n = s.size();
  if (n % 2 == 1) return s[n / 2];
  const int sum = s[n / 2 - 1] + s[n / 2];
  return (sum + 1) / 2;
}

// Gather the clamped k x k window, sort, pick the middle.
inline Grid MedianFilter(const Grid& img, int k) {
  const int h = static_cast<int>(img.size());
  const int w = static_cast<int>(img[0].size());
  const int r = k / 2;
  Grid out(h, std::vector<int>(w));
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      std::vector<int> samples;
      for (int dy = -r; dy <= r; ++dy) {
        for (int dx = -r; dx <= r; ++dx) {
          const int yy = std::min(std::max(y + dy, 0), h - 1);
          const int xx = std::min(std::max(x + dx, 0), w - 1);
          samples.push_back(img[yy][xx]);
        }
      }
      std::sort(samples.begin(), samples.end());
      out[y][x] = samples[samples.size() / 2];
    }
  }
  return out;
}

// Per-tile flags: suspects strictly outside [q1, q3], kept if the permission
// distance reaches the threshold.
inline std::vector<std::vector<bool>> IqrFlags(const Grid& img, int k,
                                               double t1, double t2) {
  const int h = static_cast<int>(img.size());
  const int w = static_cast<int>(img[0].size());
  std::vector<std::vector<bool>> flag(h, std::vector<bool>(w, false));
  for (int ty = 0; ty < h; ty += k) {
    for (int tx = 0; tx < w; tx += k) {
      std::vector<int> vals;
      for (int y = ty; y < ty + k && y < h; ++y)
        for (int x = tx; x < tx + k && x < w; ++x) vals.push_back(img[y][x]);
      const double q1 = Q1(vals);
      const double q3 = Q3(vals);
      for (int y = ty; y < ty + k && y < h; ++y) {
        for (int x = tx; x < tx + k && x < w; ++x) {
          const double v = img[y][x];
          if (v < q1 && q1 - v >= t1) flag[y][x] = true;
          if (v > q3 && v - q3 >= t2) flag[y][x] = true;
        }
      }
    }
  }
  return flag;
}

// Straight-line IQR filter: flag, then repeat simultaneous local-averaging
// passes over clean (never-flagged or already repaired) neighbors. A pass
// with no progress fills the rest with `fallback_value`, or with the
// rounded-half-up median of never-flagged pixels when `clean_median` is set.
inline Grid IqrDenoise(const Grid& img, int k, double t1, double t2,
                       bool clean_median) {
  const int h = static_cast<int>(img.size());
  const int w = static_cast<int>(img[0].size());
  const auto flag = IqrFlags(img, k, t1, t2);
  Grid out = img;
  std::vector<std::vector<bool>> known(h, std::vector<bool>(w));
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) known[y][x] = !flag[y][x];

  for (;;) {
    bool any_pending = false;
    Grid next = out;
    auto next_known = known;
    bool progress = false;
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        if (known[y][x]) continue;
        any_pending = true;
        double sum = 0;
        int n = 0;
        for (int dy = -1; dy <= 1; ++dy) {
          for (int dx = -1; dx <= 1; ++dx) {
            if (dy == 0 && dx == 0) continue;
            const int yy = y + dy;
            const int xx = x + dx;
            if (yy < 0 || yy >= h || xx < 0 || xx >= w) continue;
            if (!known[yy][xx]) continue;
            sum += out[yy][xx];
            ++n;
          }
        }
        if (n > 0) {
          next[y][x] = static_cast<int>(std::floor(sum / n + 0.5));
          next_known[y][x] = true;
          progress = true;
        }
      }
    }
    if (!any_pending) break;
    if (!progress) {
      int fill = 128;
      if (clean_median) {
        std::vector<int> clean;
        for (int y = 0; y < h; ++y)
          for (int x = 0; x < w; ++x)
            if (!flag[y][x]) clean.push_back(img[y][x]);
        if (!clean.empty()) fill = Median(clean);
      }
      for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
          if (!known[y][x]) out[y][x] = fill;
      break;
    }
    out = std::move(next);
    known = std::move(next_known);
  }
  return out;
}

}  // namespace iqrdenoise::oracle

#endif  // IQRDENOISE_TESTS_ORACLES_ORACLES_H_
