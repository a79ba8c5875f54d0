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

#include "recforge/image.hpp"

#include <algorithm>
#include <string>

#include "recforge/error.hpp"

namespace recforge {

namespace {

void check_dims(int width, int height) {
  if (width <= 0 || height <= 0)
    throw ParameterError("image dimensions must be positive, got " + std::to_string(width) + "x" +
                         std::to_string(height));
}

}  // namespace

RasterPage::RasterPage(int width, int height, std::uint8_t fill)
    : width_(width), height_(height) {
  check_dims(width, height);
  pixels_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill);
}

RasterPage::RasterPage(int width, int height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  check_dims(width, height);
  if (pixels_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height))
    throw ParameterError("pixel buffer size does not match " + std::to_string(width) + "x" +
                         std::to_string(height));
}

RasterPage RasterPage::crop(int x, int y, int w, int h) const {
  if (x < 0 || y < 0 || w <= 0 || h <= 0 || x + w > width_ || y + h > height_)
    throw ParameterError("crop rectangle outside the image");
  RasterPage out(w, h);
  for (int row = 0; row < h; ++row) {
    const auto src = this->row(y + row).subspan(static_cast<std::size_t>(x), static_cast<std::size_t>(w));
    std::copy(src.begin(), src.end(), out.pixels_.begin() + static_cast<std::ptrdiff_t>(row) * w);
  }
  return out;
}

BinaryPage::BinaryPage(int width, int height) : width_(width), height_(height) {
  check_dims(width, height);
  bits_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), 0);
}

std::size_t BinaryPage::foreground_count() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

RasterPage BinaryPage::to_raster() const {
  std::vector<std::uint8_t> pixels(bits_.size());
  std::transform(bits_.begin(), bits_.end(), pixels.begin(),
                 [](std::uint8_t b) { return b ? std::uint8_t{0} : std::uint8_t{255}; });
  return RasterPage(width_, height_, std::move(pixels));
}

}  // namespace recforge
