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

namespace recforge {

/// Network input size: portrait, 256 wide by 366 tall.
inline constexpr int kModelInputWidth = 256;
inline constexpr int kModelInputHeight = 366;

/// Where rescale() put the source inside the output frame.
struct Placement {
  int offset_x = 0;
  int offset_y = 0;
  int scaled_width = 0;
  int scaled_height = 0;
};

/// Placement for a w x h source in a target_w x target_h frame: one scale
/// factor min(target_w / w, target_h / h), centred.
Placement fit_placement(int w, int h, int target_w, int target_h);

/// Area-averaging resample into an exactly target_w x target_h page. The
/// aspect ratio is preserved; bands left over on one axis are white.
RasterPage rescale(const RasterPage& img, int target_w = kModelInputWidth,
                   int target_h = kModelInputHeight);

/// Rotation about the image centre ((w-1)/2, (h-1)/2) with bilinear
/// sampling. Positive angles turn the content counter-clockwise as viewed.
/// Areas uncovered by the rotation are white. Throws ParameterError when
/// |degrees| > 45.
RasterPage rotate(const RasterPage& img, double degrees);

}  // namespace recforge
