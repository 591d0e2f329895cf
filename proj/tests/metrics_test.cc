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

#include "iqrdenoise/metrics.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "iqrdenoise/error.h"
#include "test_util.h"

namespace iqrdenoise {
namespace {

TEST(PsnrTest, IdenticalImagesAreInfinite) {
  std::mt19937_64 rng(1);
  const GrayImage img = testing::RandomImage(rng, 10, 10);
  const PsnrResult r = Psnr(img, img);
  EXPECT_EQ(r.mse, 0.0);
  EXPECT_TRUE(r.infinite());
  EXPECT_TRUE(std::isinf(r.psnr_db));
  EXPECT_GT(r.psnr_db, 0);
}

TEST(PsnrTest, MaximalErrorIsZeroDecibels) {
  const PsnrResult r = Psnr(GrayImage(4, 4, 0), GrayImage(4, 4, 255));
  EXPECT_EQ(r.mse, 65025.0);
  EXPECT_EQ(r.psnr_db, 0.0);
}

TEST(PsnrTest, UnitErrorEverywhere) {
  const PsnrResult r = Psnr(GrayImage(7, 3, 100), GrayImage(7, 3, 101));
  EXPECT_EQ(r.mse, 1.0);
  // 10 * log10(65025) = 48.13080360867910...
  EXPECT_NEAR(r.psnr_db, 48.1308036087, 1e-9);
}

TEST(PsnrTest, HandComputedMixedError) {
  // Errors 0, 3, 4, 5 -> mse = 50 / 4 = 12.5.
  const GrayImage a(2, 2, {10, 10, 10, 10});
  const GrayImage b(2, 2, {10, 13, 6, 15});
  const PsnrResult r = Psnr(a, b);
  EXPECT_DOUBLE_EQ(r.mse, 12.5);
  EXPECT_NEAR(r.psnr_db, 10.0 * std::log10(65025.0 / 12.5), 1e-12);
}

TEST(PsnrTest, DimensionMismatch) {
  try {
    Psnr(GrayImage(3, 4), GrayImage(4, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
  }
}

TEST(PsnrTest, Symmetric) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 50; ++i) {
    const GrayImage a = testing::RandomImage(rng, 9, 5);
    const GrayImage b = testing::RandomImage(rng, 9, 5);
    EXPECT_EQ(Psnr(a, b).psnr_db, Psnr(b, a).psnr_db);
  }
}

TEST(PsnrTest, InfiniteIffIdentical) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const GrayImage a = testing::RandomImage(rng, 6, 6);
    GrayImage b = a;
    EXPECT_TRUE(Psnr(a, b).infinite());
    auto& px = b.mutable_pixels()[i % 36];
    px = static_cast<std::uint8_t>(px ^ 1);
    EXPECT_FALSE(Psnr(a, b).infinite());
  }
}

TEST(PsnrTest, StrictlyDecreasesAsOnePixelErrorGrows) {
  std::mt19937_64 rng(4);
  const GrayImage ref = testing::RandomImage(rng, 8, 8, 0, 127);
  GrayImage other = ref;
  double previous = Psnr(ref, other).psnr_db;
  for (int err = 1; err <= 128; ++err) {
    other(3, 4) = static_cast<std::uint8_t>(ref(3, 4) + err);
    const double current = Psnr(ref, other).psnr_db;
    ASSERT_LT(current, previous) << "err=" << err;
    previous = current;
  }
}

}  // namespace
}  // namespace iqrdenoise
