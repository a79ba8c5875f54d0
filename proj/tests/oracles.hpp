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

#include <cmath>
#include <cstdint>

#include "recforge/image.hpp"
#include "recforge/threshold.hpp"

namespace recforge::testing {

// Exhaustive Otsu: every t, classes counted straight from the pixels, the
// between-class variance compared as exact fractions.
inline int otsu_oracle(const RasterPage& img) {
  struct Frac {
    __int128 num;
    __int128 den;
  };
  int best_t = 0;
  Frac best{0, 1};
  for (int t = 1; t < 256; ++t) {
    std::int64_t n0 = 0, s0 = 0, n1 = 0, s1 = 0;
    for (auto v : img.pixels()) {
      if (v < t) {
        ++n0;
        s0 += v;
      } else {
        ++n1;
        s1 += v;
      }
    }
    if (n0 == 0 || n1 == 0) continue;
    // w0 w1 (mu0 - mu1)^2 * N^2 = (s0 n1 - s1 n0)^2 / (n0 n1)
    const __int128 d = static_cast<__int128>(s0) * n1 - static_cast<__int128>(s1) * n0;
    const Frac f{d * d, static_cast<__int128>(n0) * n1};
    if (f.num * best.den > best.num * f.den) {
      best = f;
      best_t = t;
    }
  }
  return best_t;
}

// Naive Sauvola: each window summed directly, same threshold expression.
inline BinaryPage sauvola_oracle(const RasterPage& img, const SauvolaParams& p) {
  BinaryPage out(img.width(), img.height());
  const int half = p.window / 2;
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      std::int64_t n = 0, s = 0, q = 0;
      for (int yy = y - half; yy <= y + half; ++yy) {
        for (int xx = x - half; xx <= x + half; ++xx) {
          if (xx < 0 || yy < 0 || xx >= img.width() || yy >= img.height()) continue;
          const std::int64_t v = img.at(xx, yy);
          ++n;
          s += v;
          q += v * v;
        }
      }
      const double nn = static_cast<double>(n);
      const double mean = static_cast<double>(s) / nn;
      const auto spread = static_cast<__int128>(n) * q - static_cast<__int128>(s) * s;
      const double dev = std::sqrt(static_cast<double>(spread) / (nn * nn));
      const double t = mean * (1.0 + p.k * (dev / p.dynamic_range - 1.0));
      out.set(x, y, static_cast<double>(img.at(x, y)) < t);
    }
  }
  return out;
}

}  // namespace recforge::testing
