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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "recforge/error.hpp"

namespace recforge {

namespace {

struct Tap {
  int source;
  std::int64_t weight;
};

// Output cell o covers source interval [o*n/m, (o+1)*n/m). Measured in units
// of 1/m pixel every overlap is an integer and the weights of a cell sum to n.
std::vector<std::vector<Tap>> area_taps(int n, int m) {
  std::vector<std::vector<Tap>> taps(static_cast<std::size_t>(m));
  for (int o = 0; o < m; ++o) {
    const std::int64_t lo = static_cast<std::int64_t>(o) * n;
    const std::int64_t hi = lo + n;
    for (auto i = lo / m; i < n && i * m < hi; ++i) {
      const std::int64_t overlap = std::min(hi, (i + 1) * m) - std::max(lo, i * m);
      if (overlap > 0) taps[static_cast<std::size_t>(o)].push_back({static_cast<int>(i), overlap});
    }
  }
  return taps;
}

}  // namespace

Placement fit_placement(int w, int h, int target_w, int target_h) {
  if (w <= 0 || h <= 0 || target_w <= 0 || target_h <= 0)
    throw ParameterError("rescale: dimensions must be positive");
  const double scale = std::min(static_cast<double>(target_w) / w, static_cast<double>(target_h) / h);
  Placement p;
  p.scaled_width = std::clamp(static_cast<int>(std::lround(w * scale)), 1, target_w);
  p.scaled_height = std::clamp(static_cast<int>(std::lround(h * scale)), 1, target_h);
  p.offset_x = (target_w - p.scaled_width) / 2;
  p.offset_y = (target_h - p.scaled_height) / 2;
  return p;
}

RasterPage rescale(const RasterPage& img, int target_w, int target_h) {
  if (img.empty()) throw ParameterError("rescale: empty image");
  const Placement p = fit_placement(img.width(), img.height(), target_w, target_h);
  const auto xtaps = area_taps(img.width(), p.scaled_width);
  const auto ytaps = area_taps(img.height(), p.scaled_height);
  const std::int64_t denominator = static_cast<std::int64_t>(img.width()) * img.height();

  RasterPage out(target_w, target_h, 255);
  std::vector<std::int64_t> row_acc(static_cast<std::size_t>(p.scaled_width));
  for (int oy = 0; oy < p.scaled_height; ++oy) {
    std::fill(row_acc.begin(), row_acc.end(), 0);
    for (const Tap& ty : ytaps[static_cast<std::size_t>(oy)]) {
      const auto src = img.row(ty.source);
      for (int ox = 0; ox < p.scaled_width; ++ox) {
        std::int64_t acc = 0;
        for (const Tap& tx : xtaps[static_cast<std::size_t>(ox)])
          acc += tx.weight * src[static_cast<std::size_t>(tx.source)];
        row_acc[static_cast<std::size_t>(ox)] += acc * ty.weight;
      }
    }
    for (int ox = 0; ox < p.scaled_width; ++ox) {
      const std::int64_t v = (row_acc[static_cast<std::size_t>(ox)] + denominator / 2) / denominator;
      out.at(p.offset_x + ox, p.offset_y + oy) = static_cast<std::uint8_t>(v);
    }
  }
  return out;
}

RasterPage rotate(const RasterPage& img, double degrees) {
  if (!(std::abs(degrees) <= 45.0)) throw ParameterError("rotate: |angle| must be <= 45 degrees");
  if (img.empty()) throw ParameterError("rotate: empty image");
  if (degrees == 0.0) return img;

  const int w = img.width();
  const int h = img.height();
  const double cx = (w - 1) / 2.0;
  const double cy = (h - 1) / 2.0;
  const double rad = degrees * std::numbers::pi / 180.0;
  const double c = std::cos(rad);
  const double s = std::sin(rad);

  auto sample = [&](int x, int y) -> double {
    if (x < 0 || y < 0 || x >= w || y >= h) return 255.0;
    return img.at(x, y);
  };

  const std::uint8_t* src = img.pixels().data();
  RasterPage out(w, h, 255);
  for (int y = 0; y < h; ++y) {
    const double dy = y - cy;
    for (int x = 0; x < w; ++x) {
      const double dx = x - cx;
      // Inverse map: the output pixel at angle +theta came from -theta.
      const double sx = cx + c * dx - s * dy;
      const double sy = cy + s * dx + c * dy;
      // Floors every coordinate that can pass the range check below.
      const int x0 = static_cast<int>(sx + 2.0) - 2;
      const int y0 = static_cast<int>(sy + 2.0) - 2;
      const double fx = x0;
      const double fy = y0;
      if (x0 < -1 || y0 < -1 || x0 >= w || y0 >= h) continue;
      const double ax = sx - fx;
      const double ay = sy - fy;
      double p00, p10, p01, p11;
      if (x0 >= 0 && y0 >= 0 && x0 + 1 < w && y0 + 1 < h) {
        const std::uint8_t* row = src + static_cast<std::size_t>(y0) * static_cast<std::size_t>(w) + x0;
        p00 = row[0];
        p10 = row[1];
        p01 = row[w];
        p11 = row[w + 1];
      } else {
        p00 = sample(x0, y0);
        p10 = sample(x0 + 1, y0);
        p01 = sample(x0, y0 + 1);
        p11 = sample(x0 + 1, y0 + 1);
      }
      const double top = p00 * (1.0 - ax) + p10 * ax;
      const double bottom = p01 * (1.0 - ax) + p11 * ax;
      const double v = top * (1.0 - ay) + bottom * ay;
      out.at(x, y) = static_cast<std::uint8_t>(std::clamp(v + 0.5, 0.0, 255.0));
    }
  }
  return out;
}

}  // namespace recforge
