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

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "recforge/error.hpp"

namespace recforge {

Histogram histogram(const RasterPage& img) {
  Histogram h{};
  for (std::uint8_t v : img.pixels()) ++h[v];
  return h;
}

std::uint8_t otsu_threshold(const RasterPage& img) {
  if (img.empty()) throw ParameterError("otsu_threshold: empty image");
  const Histogram h = histogram(img);

  std::int64_t total_count = 0;
  std::int64_t total_sum = 0;
  for (int v = 0; v < 256; ++v) {
    total_count += static_cast<std::int64_t>(h[v]);
    total_sum += static_cast<std::int64_t>(h[v]) * v;
  }

  // With n0/s0 the count/sum below t, the between-class variance times N^2
  // is (s0*n1 - s1*n0)^2 / (n0*n1). The difference is exact in 64 bits.
  int best_t = 0;
  double best = 0.0;
  std::int64_t n0 = 0;
  std::int64_t s0 = 0;
  for (int t = 1; t < 256; ++t) {
    n0 += static_cast<std::int64_t>(h[t - 1]);
    s0 += static_cast<std::int64_t>(h[t - 1]) * (t - 1);
    const std::int64_t n1 = total_count - n0;
    if (n0 == 0 || n1 == 0) continue;
    const std::int64_t s1 = total_sum - s0;
    const double diff = static_cast<double>(s0 * n1 - s1 * n0);
    const double variance = diff * diff / (static_cast<double>(n0) * static_cast<double>(n1));
    if (variance > best) {
      best = variance;
      best_t = t;
    }
  }
  return static_cast<std::uint8_t>(best_t);
}

BinaryPage apply_threshold(const RasterPage& img, std::uint8_t t) {
  BinaryPage out(img.width(), img.height());
  for (int y = 0; y < img.height(); ++y)
    for (int x = 0; x < img.width(); ++x) out.set(x, y, img.at(x, y) < t);
  return out;
}

BinaryPage sauvola_binarize(const RasterPage& img, const SauvolaParams& params) {
  if (params.window < 3 || params.window % 2 == 0)
    throw ParameterError("sauvola: window must be odd and >= 3, got " +
                         std::to_string(params.window));
  if (!(params.k > 0.0 && params.k < 1.0))
    throw ParameterError("sauvola: k must lie in (0, 1)");
  if (!(params.dynamic_range > 0.0)) throw ParameterError("sauvola: R must be > 0");
  if (img.empty()) throw ParameterError("sauvola: empty image");

  const int w = img.width();
  const int h = img.height();
  const std::size_t stride = static_cast<std::size_t>(w) + 1;

  // (w+1) x (h+1) tables with a zero first row and column.
  std::vector<std::int64_t> sum(stride * (static_cast<std::size_t>(h) + 1), 0);
  std::vector<std::int64_t> sqsum(sum.size(), 0);
  for (int y = 0; y < h; ++y) {
    std::int64_t row_sum = 0;
    std::int64_t row_sq = 0;
    for (int x = 0; x < w; ++x) {
      const std::int64_t v = img.at(x, y);
      row_sum += v;
      row_sq += v * v;
      const std::size_t i = (static_cast<std::size_t>(y) + 1) * stride + static_cast<std::size_t>(x) + 1;
      sum[i] = sum[i - stride] + row_sum;
      sqsum[i] = sqsum[i - stride] + row_sq;
    }
  }

  auto rect = [stride](const std::vector<std::int64_t>& table, int x0, int y0, int x1, int y1) {
    // Inclusive pixel rectangle [x0, x1] x [y0, y1].
    const auto at = [&](int x, int y) {
      return table[static_cast<std::size_t>(y) * stride + static_cast<std::size_t>(x)];
    };
    return at(x1 + 1, y1 + 1) - at(x0, y1 + 1) - at(x1 + 1, y0) + at(x0, y0);
  };

  const int half = params.window / 2;
  BinaryPage out(w, h);
  for (int y = 0; y < h; ++y) {
    const int y0 = std::max(0, y - half);
    const int y1 = std::min(h - 1, y + half);
    for (int x = 0; x < w; ++x) {
      const int x0 = std::max(0, x - half);
      const int x1 = std::min(w - 1, x + half);
      const std::int64_t n = static_cast<std::int64_t>(x1 - x0 + 1) * (y1 - y0 + 1);
      const std::int64_t s = rect(sum, x0, y0, x1, y1);
      const std::int64_t q = rect(sqsum, x0, y0, x1, y1);
      const double nn = static_cast<double>(n);
      const double mean = static_cast<double>(s) / nn;
      const auto spread = static_cast<__int128>(n) * q - static_cast<__int128>(s) * s;
      const double deviation = std::sqrt(static_cast<double>(spread) / (nn * nn));
      const double threshold = mean * (1.0 + params.k * (deviation / params.dynamic_range - 1.0));
      out.set(x, y, static_cast<double>(img.at(x, y)) < threshold);
    }
  }
  return out;
}

}  // namespace recforge
