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

#include "recforge/render.hpp"

#include "recforge/error.hpp"

namespace recforge {

namespace {

// Draws this many words at most when hunting for a first word that fits.
constexpr int kFirstWordTries = 8;

void write_cell(RasterPage& page, RealizedCell& cell, const Font& font, const Dictionary& dict,
                float scale, float baseline, std::uint8_t ink, Rng& rng) {
  const float limit = static_cast<float>(cell.box.width());
  const float space = font.space_advance(scale);
  float pen = 0.0f;
  std::u32string written;

  for (int attempt = 0; attempt < kFirstWordTries && written.empty(); ++attempt) {
    const auto& word = dict.draw(rng);
    const float width = font.measure(word, scale);
    if (width > limit) continue;
    font.draw(page, word, static_cast<float>(cell.box.x0), baseline, scale, ink, cell.box);
    pen = width;
    written = word;
  }
  if (written.empty()) return;

  for (;;) {
    const auto& word = dict.draw(rng);
    const float width = font.measure(word, scale);
    if (pen + space + width > limit) break;
    font.draw(page, word, static_cast<float>(cell.box.x0) + pen + space, baseline, scale, ink,
              cell.box);
    pen += space + width;
    written += U' ';
    written += word;
  }
  cell.text = encode_utf8(written);
}

void write_record(RasterPage& page, RecordInstance& record, const Font& font, const Dictionary& dict,
                  std::uint8_t ink, Rng& rng) {
  for (auto& line : record.lines) {
    const float height = static_cast<float>(line.box.height());
    const float em = kEmToLineHeight * height;
    const float scale = font.scale_for_em(em);
    const float margin = 0.5f * (1.0f - kEmToLineHeight) * height;
    const float baseline = static_cast<float>(line.box.y0) + margin + em * font.ascent_fraction();
    for (auto& cell : line.cells) {
      if (cell.filled) write_cell(page, cell, font, dict, scale, baseline, ink, rng);
    }
  }
}

}  // namespace

PageRealization render_page(const PageTemplate& t, PageLayout layout, const RasterPage& background,
                            const Font& font, const Dictionary& dict, Rng& rng) {
  if (dict.size() == 0) throw ResourceError("dictionary is empty");
  if (background.width() < t.page_width || background.height() < t.page_height)
    throw ParameterError("background " + std::to_string(background.width()) + "x" +
                         std::to_string(background.height()) + " is smaller than the page " +
                         std::to_string(t.page_width) + "x" + std::to_string(t.page_height));

  Rng crop_rng = rng.split(0);
  const int ox = static_cast<int>(crop_rng.uniform_int(0, background.width() - t.page_width));
  const int oy = static_cast<int>(crop_rng.uniform_int(0, background.height() - t.page_height));

  PageRealization page;
  page.image = (ox == 0 && oy == 0 && background.width() == t.page_width &&
                background.height() == t.page_height)
                   ? background
                   : background.crop(ox, oy, t.page_width, t.page_height);
  page.font_id = font.id();

  Rng text_rng = rng.split(1);
  const auto ink = static_cast<std::uint8_t>(text_rng.uniform_int(t.ink.lo, t.ink.hi));
  if (layout.header) write_record(page.image, *layout.header, font, dict, ink, text_rng);
  for (auto& record : layout.records) write_record(page.image, record, font, dict, ink, text_rng);

  page.header = std::move(layout.header);
  page.records = std::move(layout.records);
  page.record_count = static_cast<int>(page.records.size());
  return page;
}

}  // namespace recforge
