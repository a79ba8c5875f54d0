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

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "recforge/image.hpp"

namespace recforge {

/// Empty pages, ink erased, ready to be written on again.
struct PalimpsestSet {
  std::vector<RasterPage> backgrounds;
  std::vector<std::string> source_ids;

  bool empty() const noexcept { return backgrounds.empty(); }
  std::size_t size() const noexcept { return backgrounds.size(); }
};

/// Side of the square averaging window.
inline constexpr int kBackgroundWindow = 20;
/// Per-side growth when a window holds no background pixel.
inline constexpr int kBackgroundWindowGrowth = 10;

/// Erases ink. Pixels below the Otsu level are replaced by the rounded mean
/// of the background pixels (classified on the input) inside a 20 x 20
/// window that spans 9 pixels above/left and 10 below/right of the target.
/// If that window has no background pixel it grows by 10 per side until it
/// does. Background pixels are copied unchanged.
RasterPage extract_background(const RasterPage& img);

/// A uniform page, used when no scanned backgrounds are supplied.
RasterPage blank_background(int width, int height, std::uint8_t paper = 225);

/// Every *.png in `dir` (sorted by file name), loaded as-is. Ids are file
/// stems.
PalimpsestSet load_palimpsests(const std::filesystem::path& dir);

struct ExtractionSummary {
  std::vector<std::filesystem::path> written;
  std::vector<std::string> failures;
};

/// Runs extract_background on every *.png in `in_dir` that is not itself a
/// *.bg.png and writes <stem>.bg.png into `out_dir`. Unreadable inputs are
/// reported in failures; the rest still run.
ExtractionSummary extract_backgrounds(const std::filesystem::path& in_dir,
                                      const std::filesystem::path& out_dir, int workers = 1);

}  // namespace recforge
