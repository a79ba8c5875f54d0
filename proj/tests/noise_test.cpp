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

#include "recforge/noise.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "recforge/error.hpp"
#include "support.hpp"

namespace recforge {
namespace {

std::size_t changed(const RasterPage& a, const RasterPage& b) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.size(); ++i) n += a.pixels()[i] != b.pixels()[i];
  return n;
}

TEST(SaltPepper, ZeroProbabilityIsIdentity) {
  Rng rng(1);
  const RasterPage img = testing::random_image(rng, 40, 40);
  EXPECT_EQ(add_salt_pepper(img, 0.0, rng), img);
}

TEST(SaltPepper, FlipCountWithinBinomialBounds) {
  const RasterPage img(200, 200, 128);
  const double p = 0.05;
  const double n = static_cast<double>(img.size());
  const double mean = n * p;
  const double sd = std::sqrt(n * p * (1 - p));
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    Rng rng(seed);
    const RasterPage out = add_salt_pepper(img, p, rng);
    std::size_t salt = 0, pepper = 0;
    for (auto v : out.pixels()) {
      salt += v == 255;
      pepper += v == 0;
    }
    EXPECT_EQ(salt + pepper, changed(img, out));
    EXPECT_NEAR(static_cast<double>(salt + pepper), mean, 5 * sd);
    // Even odds between the two colours.
    EXPECT_NEAR(static_cast<double>(salt), mean / 2, 5 * std::sqrt(mean / 4) + 5 * sd / 2);
  }
}

TEST(SaltPepper, FullProbabilityFlipsEverything) {
  Rng rng(3);
  const RasterPage out = add_salt_pepper(RasterPage(50, 50, 128), 1.0, rng);
  for (auto v : out.pixels()) ASSERT_TRUE(v == 0 || v == 255);
}

TEST(SaltPepper, DeterministicAndValidated) {
  const RasterPage img(30, 30, 100);
  Rng a(8), b(8);
  EXPECT_EQ(add_salt_pepper(img, 0.3, a), add_salt_pepper(img, 0.3, b));
  EXPECT_THROW(add_salt_pepper(img, 1.5, a), ParameterError);
  EXPECT_THROW(add_salt_pepper(img, -0.1, a), ParameterError);
}

TEST(LineArtifacts, ZeroRateIsIdentity) {
  const RasterPage img(64, 64, 128);
  NoiseSpec spec;
  Rng rng(2);
  EXPECT_EQ(add_line_artifacts(img, spec, rng), img);
}

TEST(LineArtifacts, UntouchedFractionMatchesPoissonZeroMass) {
  // Every line crosses the page, so a page stays clean iff zero lines were
  // drawn: P = exp(-rate).
  const RasterPage img(48, 48, 128);
  NoiseSpec spec;
  spec.line_artifact_rate = 2.0;
  const int runs = 4000;
  int clean = 0;
  for (int i = 0; i < runs; ++i) {
    Rng rng(derive_seed(17, static_cast<std::uint64_t>(i)));
    clean += add_line_artifacts(img, spec, rng) == img;
  }
  const double p = std::exp(-2.0);
  EXPECT_NEAR(clean / static_cast<double>(runs), p, 5 * std::sqrt(p * (1 - p) / runs));
}

TEST(LineArtifacts, LinesAreThinAndSpanThePage) {
  const RasterPage img(100, 80, 128);
  NoiseSpec spec;
  spec.line_artifact_rate = 1.0;
  spec.line_artifact_color = LineColor::white;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng count_rng(seed);
    const auto lines = count_rng.poisson(1.0);
    Rng rng(seed);
    const RasterPage out = add_line_artifacts(img, spec, rng);
    const std::size_t touched = changed(img, out);
    for (auto v : out.pixels()) ASSERT_TRUE(v == 128 || v == 255);
    // One pixel per step along the major axis; lines never exceed that.
    EXPECT_LE(touched, static_cast<std::size_t>(lines) * 100u);
    if (lines == 1) EXPECT_GE(touched, 80u / 2);
  }
}

TEST(ScanNoise, NoStagesIsIdentity) {
  Rng rng(5);
  const RasterPage img = testing::random_image(rng, 30, 20);
  EXPECT_EQ(apply_scan_noise(img, NoiseSpec{}, Rng(1)), img);
}

TEST(ScanNoise, DeterministicPerKey) {
  const RasterPage img = testing::stroke_image(120, 90, 220, 30);
  NoiseSpec spec{0.01, 2.0, LineColor::black, 3.0};
  EXPECT_EQ(apply_scan_noise(img, spec, Rng(4)), apply_scan_noise(img, spec, Rng(4)));
  EXPECT_NE(apply_scan_noise(img, spec, Rng(4)), apply_scan_noise(img, spec, Rng(5)));
}

}  // namespace
}  // namespace recforge
