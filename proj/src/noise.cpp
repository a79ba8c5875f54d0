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

#include <cmath>
#include <numbers>

#include "recforge/error.hpp"
#include "recforge/transform.hpp"

namespace recforge {

RasterPage add_salt_pepper(const RasterPage& img, double p, Rng& rng) {
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("salt and pepper: p must lie in [0, 1]");
  RasterPage out = img;
  for (auto& v : out.pixels()) {
    const std::uint64_t draw = rng();
    // Top 53 bits decide whether the pixel flips, the lowest bit its colour.
    const double u = static_cast<double>(draw >> 11) * 0x1.0p-53;
    if (u < p) v = (draw & 1U) ? 255 : 0;
  }
  return out;
}

RasterPage add_line_artifacts(const RasterPage& img, const NoiseSpec& spec, Rng& rng) {
  if (!(spec.line_artifact_rate >= 0.0))
    throw ParameterError("line artifacts: rate must be >= 0");
  RasterPage out = img;
  const std::uint8_t color = spec.line_artifact_color == LineColor::black ? 0 : 255;
  const int w = out.width();
  const int h = out.height();
  const auto count = rng.poisson(spec.line_artifact_rate);
  for (std::int64_t n = 0; n < count; ++n) {
    const double px = rng.uniform(0.0, w);
    const double py = rng.uniform(0.0, h);
    const double angle = rng.uniform(0.0, std::numbers::pi);
    const double dx = std::cos(angle);
    const double dy = std::sin(angle);
    // Walk the major axis one pixel at a time.
    if (std::abs(dx) >= std::abs(dy)) {
      const double slope = dy / dx;
      for (int x = 0; x < w; ++x) {
        const auto y = static_cast<int>(std::lround(py + (x + 0.5 - px) * slope - 0.5));
        if (y >= 0 && y < h) out.at(x, y) = color;
      }
    } else {
      const double slope = dx / dy;
      for (int y = 0; y < h; ++y) {
        const auto x = static_cast<int>(std::lround(px + (y + 0.5 - py) * slope - 0.5));
        if (x >= 0 && x < w) out.at(x, y) = color;
      }
    }
  }
  return out;
}

RasterPage apply_scan_noise(const RasterPage& img, const NoiseSpec& spec, const Rng& rng) {
  RasterPage out = img;
  if (spec.rotation_range > 0.0) {
    Rng angle_rng = rng.split(0);
    out = rotate(out, angle_rng.uniform(-spec.rotation_range, spec.rotation_range));
  }
  if (spec.line_artifact_rate > 0.0) {
    Rng line_rng = rng.split(1);
    out = add_line_artifacts(out, spec, line_rng);
  }
  if (spec.salt_pepper_probability > 0.0) {
    Rng sp_rng = rng.split(2);
    out = add_salt_pepper(out, spec.salt_pepper_probability, sp_rng);
  }
  return out;
}

}  // namespace recforge
