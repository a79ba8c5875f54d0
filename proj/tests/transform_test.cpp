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

#include "recforge/transform.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "recforge/error.hpp"
#include "support.hpp"

namespace recforge {
namespace {

struct Centroid {
  double x = 0, y = 0, mass = 0;
};

// Darkness-weighted centroid in pixel-centre coordinates.
Centroid centroid(const RasterPage& img) {
  Centroid c;
  for (int y = 0; y < img.height(); ++y)
    for (int x = 0; x < img.width(); ++x) {
      const double m = 255.0 - img.at(x, y);
      c.x += m * (x + 0.5);
      c.y += m * (y + 0.5);
      c.mass += m;
    }
  c.x /= c.mass;
  c.y /= c.mass;
  return c;
}

TEST(Rescale, OutputHasTargetSize) {
  Rng rng(1);
  for (auto [w, h] : {std::pair{1000, 732}, {50, 900}, {256, 366}, {3, 2}, {2000, 2000}}) {
    const RasterPage out = rescale(testing::random_image(rng, w, h));
    EXPECT_EQ(out.width(), kModelInputWidth);
    EXPECT_EQ(out.height(), kModelInputHeight);
  }
}

TEST(Rescale, SameSizeIsIdentity) {
  Rng rng(2);
  const RasterPage img = testing::random_image(rng, 256, 366);
  EXPECT_EQ(rescale(img), img);
}

TEST(Rescale, IntegerDownscaleAveragesBlocks) {
  RasterPage img(4, 2);
  const std::uint8_t v[] = {0, 100, 200, 40, 50, 50, 0, 0};
  for (int i = 0; i < 8; ++i) img.pixels()[static_cast<std::size_t>(i)] = v[i];
  const RasterPage out = rescale(img, 2, 1);
  EXPECT_EQ(out.at(0, 0), 50);  // (0+100+50+50)/4
  EXPECT_EQ(out.at(1, 0), 60);  // (200+40+0+0)/4
}

TEST(Rescale, WideInputGetsWhiteBandsAndKeepsCentroid) {
  RasterPage img(1000, 732, 230);
  for (int y = 300; y < 420; ++y)
    for (int x = 600; x < 760; ++x) img.at(x, y) = 20;
  const Placement p = fit_placement(1000, 732, kModelInputWidth, kModelInputHeight);
  EXPECT_EQ(p.scaled_width, 256);
  EXPECT_EQ(p.scaled_height, 187);  // round(732 * 0.256)
  EXPECT_EQ(p.offset_x, 0);
  EXPECT_EQ(p.offset_y, (366 - 187) / 2);

  const RasterPage out = rescale(img);
  for (int x = 0; x < out.width(); ++x) {
    EXPECT_EQ(out.at(x, 0), 255);
    EXPECT_EQ(out.at(x, p.offset_y - 1), 255);
    EXPECT_EQ(out.at(x, p.offset_y + p.scaled_height), 255);
    EXPECT_EQ(out.at(x, out.height() - 1), 255);
    EXPECT_EQ(out.at(x, p.offset_y), 230);
  }

  // Invert the page background to isolate the blob before measuring.
  auto blob_only = [](RasterPage im, std::uint8_t paper) {
    for (auto& v : im.pixels()) v = v >= paper ? 255 : static_cast<std::uint8_t>(255 - (paper - v));
    return im;
  };
  const Centroid before = centroid(blob_only(img, 230));
  const Centroid after = centroid(blob_only(out, 230));
  const double sx = static_cast<double>(p.scaled_width) / 1000.0;
  const double sy = static_cast<double>(p.scaled_height) / 732.0;
  EXPECT_NEAR(after.x, p.offset_x + before.x * sx, 1.0);
  EXPECT_NEAR(after.y, p.offset_y + before.y * sy, 1.0);
}

TEST(Rescale, TallInputPadsSides) {
  const RasterPage img(100, 1000, 0);
  const Placement p = fit_placement(100, 1000, kModelInputWidth, kModelInputHeight);
  EXPECT_EQ(p.scaled_height, 366);
  EXPECT_EQ(p.scaled_width, 37);
  const RasterPage out = rescale(img);
  EXPECT_EQ(out.at(0, 100), 255);
  EXPECT_EQ(out.at(p.offset_x, 100), 0);
  EXPECT_EQ(out.at(p.offset_x + p.scaled_width, 100), 255);
}

TEST(Rotate, ZeroIsCopyAndBoundsAreChecked) {
  Rng rng(4);
  const RasterPage img = testing::random_image(rng, 31, 20);
  EXPECT_EQ(rotate(img, 0.0), img);
  EXPECT_THROW(rotate(img, 45.5), ParameterError);
  EXPECT_THROW(rotate(img, -90), ParameterError);
  EXPECT_NO_THROW(rotate(img, -45));
}

TEST(Rotate, PositiveAngleTurnsCounterClockwise) {
  RasterPage img(101, 101, 255);
  // 3x3 dot 30 px right of the centre (50, 50).
  for (int y = 49; y <= 51; ++y)
    for (int x = 79; x <= 81; ++x) img.at(x, y) = 0;
  const RasterPage out = rotate(img, 30.0);
  const Centroid c = centroid(out);
  const double a = 30.0 * std::numbers::pi / 180.0;
  // Pixel-centre coordinates: the centre of rotation is (50.5, 50.5).
  EXPECT_NEAR(c.x, 50.5 + 30 * std::cos(a), 0.5);
  EXPECT_NEAR(c.y, 50.5 - 30 * std::sin(a), 0.5);
}

TEST(Rotate, CornersBecomeWhiteAndSizeIsKept) {
  const RasterPage img(80, 60, 0);
  const RasterPage out = rotate(img, 20.0);
  EXPECT_EQ(out.width(), 80);
  EXPECT_EQ(out.height(), 60);
  EXPECT_EQ(out.at(0, 0), 255);
  EXPECT_EQ(out.at(79, 59), 255);
  EXPECT_EQ(out.at(40, 30), 0);
}

TEST(Rotate, RoundTripKeepsForegroundCount) {
  const RasterPage img = testing::stroke_image(300, 400, 230, 20);
  auto ink = [](const RasterPage& im) {
    std::size_t n = 0;
    for (auto v : im.pixels()) n += v < 128;
    return n;
  };
  for (double theta : {1.0, 2.0, 7.5, 30.0}) {
    const RasterPage back = rotate(rotate(img, theta), -theta);
    const double ratio = static_cast<double>(ink(back)) / static_cast<double>(ink(img));
    EXPECT_NEAR(ratio, 1.0, 0.05) << theta;
  }
}

}  // namespace
}  // namespace recforge
