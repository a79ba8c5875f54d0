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
#include <optional>
#include <string>
#include <vector>

#include "recforge/dictionary.hpp"
#include "recforge/font.hpp"
#include "recforge/image.hpp"
#include "recforge/layout.hpp"
#include "recforge/rng.hpp"
#include "recforge/template.hpp"

namespace recforge {

/// A finished page and its ground truth.
struct PageRealization {
  RasterPage image;
  int record_count = 0;
  std::vector<RecordInstance> records;
  std::optional<RecordInstance> header;
  std::uint64_t seed = 0;
  std::string background_id;
  std::string font_id;

  bool header_present() const noexcept { return header.has_value(); }
};

/// Glyph em height as a fraction of the line height.
inline constexpr float kEmToLineHeight = 0.8f;

/// Writes the layout onto a copy of `background`.
///
/// A background larger than the page is cropped at a random offset; a
/// smaller one is a ParameterError. Ink intensity is drawn once per page
/// from t.ink. In every filled cell, dictionary words are appended
/// left to right until the next one would overflow the cell; glyphs are
/// clipped to the cell box. The header and records are returned with the
/// text actually written.
PageRealization render_page(const PageTemplate& t, PageLayout layout, const RasterPage& background,
                            const Font& font, const Dictionary& dict, Rng& rng);

}  // namespace recforge
