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

#include "recforge/font.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iterator>
#include <vector>

#include "recforge/error.hpp"

#if defined(__GNUC__)
#pragma GCC diagnostic push
#pragma GCC diagnostic ignored "-Wunused-function"
#pragma GCC diagnostic ignored "-Wmissing-field-initializers"
#endif
#define STB_TRUETYPE_IMPLEMENTATION
#define STBTT_STATIC
#include "stb_truetype.h"
#if defined(__GNUC__)
#pragma GCC diagnostic pop
#endif

namespace recforge {

struct Font::Face {
  std::string id;
  std::vector<unsigned char> bytes;
  stbtt_fontinfo info{};
  int ascent = 0;
  int descent = 0;
};

Font Font::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ResourceError("cannot open font " + path.string());
  auto face = std::make_shared<Face>();
  face->bytes.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  face->id = path.stem().string();
  if (face->bytes.size() < 12) throw ResourceError("not a font file: " + path.string());
  const int offset = stbtt_GetFontOffsetForIndex(face->bytes.data(), 0);
  if (offset < 0 || !stbtt_InitFont(&face->info, face->bytes.data(), offset))
    throw ResourceError("unsupported font file: " + path.string());
  int line_gap = 0;
  stbtt_GetFontVMetrics(&face->info, &face->ascent, &face->descent, &line_gap);
  if (face->ascent - face->descent <= 0) throw ResourceError("font has no vertical extent: " + path.string());
  Font font;
  font.face_ = std::move(face);
  return font;
}

Font Font::resolve(const std::string& name, const ResourcePaths& paths) {
  const std::filesystem::path direct(name);
  if (std::filesystem::is_regular_file(direct)) return load(direct);
  for (const char* ext : {"", ".ttf", ".otf"}) {
    const auto in_dir = paths.font_dir / (name + ext);
    if (std::filesystem::is_regular_file(in_dir)) return load(in_dir);
  }
  throw ResourceError("font '" + name + "' not found (searched " + paths.font_dir.string() + ")");
}

const std::string& Font::id() const noexcept { return face_->id; }

float Font::scale_for_em(float em_px) const {
  return stbtt_ScaleForMappingEmToPixels(&face_->info, em_px);
}

float Font::ascent_fraction() const {
  return static_cast<float>(face_->ascent) / static_cast<float>(face_->ascent - face_->descent);
}

float Font::measure(std::u32string_view text, float scale) const {
  float pen = 0.0f;
  for (std::size_t i = 0; i < text.size(); ++i) {
    int advance = 0;
    int bearing = 0;
    stbtt_GetCodepointHMetrics(&face_->info, static_cast<int>(text[i]), &advance, &bearing);
    pen += static_cast<float>(advance) * scale;
    if (i + 1 < text.size())
      pen += static_cast<float>(stbtt_GetCodepointKernAdvance(&face_->info, static_cast<int>(text[i]),
                                                              static_cast<int>(text[i + 1]))) *
             scale;
  }
  return pen;
}

float Font::space_advance(float scale) const { return measure(U" ", scale); }

float Font::draw(RasterPage& page, std::u32string_view text, float x, float baseline, float scale,
                 std::uint8_t ink, const Box& clip) const {
  const int base = static_cast<int>(std::lround(baseline));
  const Box bounds{std::max(clip.x0, 0), std::max(clip.y0, 0), std::min(clip.x1, page.width()),
                   std::min(clip.y1, page.height())};
  std::vector<unsigned char> coverage;
  float pen = x;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const int cp = static_cast<int>(text[i]);
    const float origin = std::floor(pen);
    const float shift = pen - origin;
    int x0 = 0;
    int y0 = 0;
    int x1 = 0;
    int y1 = 0;
    stbtt_GetCodepointBitmapBoxSubpixel(&face_->info, cp, scale, scale, shift, 0.0f, &x0, &y0, &x1, &y1);
    const int gw = x1 - x0;
    const int gh = y1 - y0;
    if (gw > 0 && gh > 0) {
      coverage.assign(static_cast<std::size_t>(gw) * static_cast<std::size_t>(gh), 0);
      stbtt_MakeCodepointBitmapSubpixel(&face_->info, coverage.data(), gw, gh, gw, scale, scale, shift,
                                        0.0f, cp);
      const int left = static_cast<int>(origin) + x0;
      const int top = base + y0;
      for (int gy = 0; gy < gh; ++gy) {
        const int py = top + gy;
        if (py < bounds.y0 || py >= bounds.y1) continue;
        for (int gx = 0; gx < gw; ++gx) {
          const int px = left + gx;
          if (px < bounds.x0 || px >= bounds.x1) continue;
          if (coverage[static_cast<std::size_t>(gy) * static_cast<std::size_t>(gw) + static_cast<std::size_t>(gx)] >= 128) {
            auto& v = page.at(px, py);
            v = std::min(v, ink);
          }
        }
      }
    }
    int advance = 0;
    int bearing = 0;
    stbtt_GetCodepointHMetrics(&face_->info, cp, &advance, &bearing);
    pen += static_cast<float>(advance) * scale;
    if (i + 1 < text.size())
      pen += static_cast<float>(stbtt_GetCodepointKernAdvance(&face_->info, cp, static_cast<int>(text[i + 1]))) * scale;
  }
  return pen - x;
}

}  // namespace recforge
