// Copyright 2026 The recforge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License"); you
// may not use this file except in compliance with the License. You may
// obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "recforge/threshold.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "recforge/error.hpp"
#include "oracles.hpp"
#include "support.hpp"

namespace recforge {
namespace {

using testing::otsu_oracle;
using testing::random_image;
using testing::sauvola_oracle;

RasterPage bimodal_image(Rng& rng, int w, int h) {
  const int a = static_cast<int>(rng.uniform_int(10, 100));
  const int b = static_cast<int>(rng.uniform_int(140, 250));
  const double share = rng.uniform(0.05, 0.5);
  RasterPage img(w, h);
  for (auto& v : img.pixels()) {
    const int centre = rng.bernoulli(share) ? a : b;
    v = static_cast<std::uint8_t>(std::clamp<std::int64_t>(centre + rng.uniform_int(-20, 20), 0, 255));
  }
  return img;
}

TEST(Otsu, MatchesExhaustiveSearch) {
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    const int w = static_cast<int>(rng.uniform_int(1, 60));
    const int h = static_cast<int>(rng.uniform_int(1, 60));
    const RasterPage img = i % 2 ? random_image(rng, w, h) : bimodal_image(rng, w, h);
    ASSERT_EQ(otsu_threshold(img), otsu_oracle(img)) << "image " << i;
  }
}

TEST(Otsu, ConstantImageHasNoForeground) {
  const RasterPage img(40, 30, 128);
  EXPECT_EQ(otsu_threshold(img), 0);
  EXPECT_EQ(apply_threshold(img, otsu_threshold(img)).foreground_count(), 0u);
}

TEST(Otsu, TwoLevelsSplitAtTheDarkOne) {
  RasterPage img(10, 10, 200);
  for (int x = 0; x < 10; ++x) img.at(x, 3) = 40;
  const auto t = otsu_threshold(img);
  EXPECT_EQ(t, 41);
  const BinaryPage fg = apply_threshold(img, t);
  EXPECT_EQ(fg.foreground_count(), 10u);
  EXPECT_TRUE(fg.at(5, 3));
  EXPECT_FALSE(fg.at(5, 4));
}

TEST(Otsu, HistogramCountsEveryPixel) {
  Rng rng(5);
  const RasterPage img = random_image(rng, 33, 17);
  const Histogram h = histogram(img);
  std::uint64_t total = 0;
  for (auto c : h) total += c;
  EXPECT_EQ(total, img.size());
}

TEST(Sauvola, BitIdenticalToNaiveWindows) {
  Rng rng(99);
  for (int i = 0; i < 20; ++i) {
    const RasterPage img = i % 2 ? random_image(rng, 64, 64) : bimodal_image(rng, 64, 64);
    for (int window : {3, 15, 31}) {
      const SauvolaParams p{window, 0.2, 128.0};
      ASSERT_EQ(sauvola_binarize(img, p), sauvola_oracle(img, p)) << "image " << i << " window " << window;
    }
  }
}

TEST(Sauvola, NonSquareImagesAndOtherParameters) {
  Rng rng(3);
  const RasterPage img = random_image(rng, 37, 11);
  const SauvolaParams p{7, 0.5, 64.0};
  EXPECT_EQ(sauvola_binarize(img, p), sauvola_oracle(img, p));
}

TEST(Sauvola, UniformImageIsAllBackground) {
  for (int v : {0, 1, 77, 255}) {
    const RasterPage img(20, 20, static_cast<std::uint8_t>(v));
    EXPECT_EQ(sauvola_binarize(img, {31, 0.5, 128.0}).foreground_count(), 0u) << v;
  }
}

TEST(Sauvola, DarkStrokeOnLightGround) {
  const RasterPage img = testing::stroke_image(120, 90, 220, 30);
  const BinaryPage fg = sauvola_binarize(img);
  for (int y = 0; y < img.height(); ++y)
    for (int x = 0; x < img.width(); ++x) ASSERT_EQ(fg.at(x, y), img.at(x, y) == 30) << x << "," << y;
}

TEST(Sauvola, RejectsBadParameters) {
  const RasterPage img(10, 10);
  EXPECT_THROW(sauvola_binarize(img, {4, 0.2, 128}), ParameterError);
  EXPECT_THROW(sauvola_binarize(img, {1, 0.2, 128}), ParameterError);
  EXPECT_THROW(sauvola_binarize(img, {3, 0.0, 128}), ParameterError);
  EXPECT_THROW(sauvola_binarize(img, {3, 0.2, 0}), ParameterError);
}

}  // namespace
}  // namespace recforge
