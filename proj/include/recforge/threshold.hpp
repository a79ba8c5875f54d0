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

#pragma once

#include <array>
#include <cstdint>

#include "recforge/image.hpp"

namespace recforge {

using Histogram = std::array<std::uint64_t, 256>;

Histogram histogram(const RasterPage& img);

/// Global Otsu level t in [0, 255]. A pixel is foreground iff its value is
/// strictly below t, so t = 0 selects nothing.
///
/// t maximizes the between-class variance of {v < t} versus {v >= t};
/// ties go to the smallest t. A constant image has no separable classes
/// and yields 0.
std::uint8_t otsu_threshold(const RasterPage& img);

/// Foreground where value < t.
BinaryPage apply_threshold(const RasterPage& img, std::uint8_t t);

struct SauvolaParams {
  int window = 31;
  double k = 0.2;
  double dynamic_range = 128.0;
};

/// Local thresholding: foreground iff v < m * (1 + k * (s / R - 1)), with m
/// and s the mean and population standard deviation of the window centred
/// on the pixel (clipped at the borders). Window sums come from 64-bit
/// integral images, so the cost per pixel is constant.
///
/// Throws ParameterError unless the window is odd and >= 3, 0 < k < 1 and
/// R > 0.
BinaryPage sauvola_binarize(const RasterPage& img, const SauvolaParams& params = {});

}  // namespace recforge
