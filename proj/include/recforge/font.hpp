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

#include <filesystem>
#include <memory>
#include <string>
#include <string_view>

#include "recforge/dictionary.hpp"
#include "recforge/image.hpp"

namespace recforge {

/// A TrueType face. Copies share the loaded file; all members are const and
/// safe to call from several threads.
class Font {
 public:
  /// Throws ResourceError when the file is missing or not a usable font.
  static Font load(const std::filesystem::path& path);

  /// `name` may be a path; otherwise it is looked up in paths.font_dir, with
  /// or without a .ttf/.otf extension.
  static Font resolve(const std::string& name, const ResourcePaths& paths);

  /// File stem, recorded in manifests.
  const std::string& id() const noexcept;

  /// Pixels per font unit for an em square `em_px` tall.
  float scale_for_em(float em_px) const;

  /// Fraction of the ascent+descent extent that lies above the baseline.
  float ascent_fraction() const;

  /// Pen advance for `text` including kerning.
  float measure(std::u32string_view text, float scale) const;

  /// Pen advance of a single space.
  float space_advance(float scale) const;

  /// Draws `text` with its pen starting at (x, baseline). Ink is opaque:
  /// a pixel whose glyph coverage reaches 50% takes min(pixel, ink).
  /// Nothing is drawn outside `clip`. Returns the pen advance.
  float draw(RasterPage& page, std::u32string_view text, float x, float baseline, float scale,
             std::uint8_t ink, const Box& clip) const;

 private:
  struct Face;
  std::shared_ptr<const Face> face_;
};

}  // namespace recforge
