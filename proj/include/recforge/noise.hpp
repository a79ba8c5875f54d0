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

#include "recforge/image.hpp"
#include "recforge/rng.hpp"
#include "recforge/template.hpp"

namespace recforge {

/// Each pixel independently becomes 0 or 255 (even odds) with probability
/// p. Consumes exactly one draw per pixel. Throws ParameterError unless
/// 0 <= p <= 1.
RasterPage add_salt_pepper(const RasterPage& img, double p, Rng& rng);

/// Draws Poisson(spec.line_artifact_rate) straight 1-pixel lines in
/// spec.line_artifact_color, each through a uniform point at a uniform
/// orientation and running edge to edge.
RasterPage add_line_artifacts(const RasterPage& img, const NoiseSpec& spec, Rng& rng);

/// The scan simulation applied to every generated page: rotation by an
/// angle uniform in [-rotation_range, +rotation_range], then line
/// artifacts, then salt and pepper. Each stage draws from its own substream.
RasterPage apply_scan_noise(const RasterPage& img, const NoiseSpec& spec, const Rng& rng);

}  // namespace recforge
