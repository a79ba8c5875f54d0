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

#include <gtest/gtest.h>

#include "recforge/error.hpp"
#include "recforge/font.hpp"
#include "support.hpp"

namespace recforge {
namespace {

const Font& caveat() {
  static const Font font = Font::resolve("Caveat-Regular", default_resource_paths());
  return font;
}

PageTemplate page(int w, int h) {
  PageTemplate t;
  t.page_width = w;
  t.page_height = h;
  t.fonts = {"Caveat-Regular"};
  t.dictionary.inline_text = "x";
  return t;
}

RecordInstance one_cell_record(Box cell_box) {
  RecordInstance r;
  r.top_y = cell_box.y0;
  r.bottom_y = cell_box.y1;
  RealizedLine line;
  line.box = {0, cell_box.y0, cell_box.x1, cell_box.y1};
  line.cells.push_back({cell_box, true, {}});
  r.lines.push_back(line);
  return r;
}

Box ink_bounds(const RasterPage& img, std::uint8_t below) {
  Box b{img.width(), img.height(), -1, -1};
  for (int y = 0; y < img.height(); ++y)
    for (int x = 0; x < img.width(); ++x)
      if (img.at(x, y) < below) {
        b.x0 = std::min(b.x0, x);
        b.y0 = std::min(b.y0, y);
        b.x1 = std::max(b.x1, x + 1);
        b.y1 = std::max(b.y1, y + 1);
      }
  return b;
}

TEST(Font, LoadsBundledFacesAndMeasures) {
  const Font& f = caveat();
  EXPECT_EQ(f.id(), "Caveat-Regular");
  const float scale = f.scale_for_em(32.0f);
  EXPECT_GT(scale, 0.0f);
  EXPECT_GT(f.measure(U"matrimonio", scale), f.measure(U"ma", scale));
  EXPECT_GT(f.space_advance(scale), 0.0f);
  EXPECT_GT(f.ascent_fraction(), 0.5f);
  EXPECT_LT(f.ascent_fraction(), 1.0f);
  for (const char* name : {"DancingScript-Regular", "HomemadeApple-Regular.ttf"})
    EXPECT_NO_THROW(Font::resolve(name, default_resource_paths())) << name;
  EXPECT_THROW(Font::resolve("NoSuchFont", default_resource_paths()), ResourceError);
  testing::TempDir dir;
  testing::write_file(dir / "bad.ttf", "not a font");
  EXPECT_THROW(Font::load(dir / "bad.ttf"), ResourceError);
}

TEST(Font, DrawIsClippedAndOpaque) {
  RasterPage img(200, 60, 200);
  const Box clip{10, 5, 60, 55};
  const float scale = caveat().scale_for_em(40.0f);
  caveat().draw(img, U"Lombardia", 10.0f, 45.0f, scale, 30, clip);
  for (int y = 0; y < img.height(); ++y)
    for (int x = 0; x < img.width(); ++x) {
      const auto v = img.at(x, y);
      ASSERT_TRUE(v == 200 || v == 30) << x << "," << y;
      if (!clip.contains(x, y)) ASSERT_EQ(v, 200);
    }
  EXPECT_NE(ink_bounds(img, 128).x1, -1);
}

TEST(Render, NothingToWriteLeavesBackground) {
  Rng bg_rng(1);
  const RasterPage bg = testing::random_image(bg_rng, 120, 90, 150, 255);
  Rng rng(2);
  const PageRealization p = render_page(page(120, 90), PageLayout{}, bg, caveat(), Dictionary("a b"), rng);
  EXPECT_EQ(p.image, bg);
  EXPECT_EQ(p.record_count, 0);
  EXPECT_FALSE(p.header_present());
  EXPECT_EQ(p.font_id, "Caveat-Regular");
}

TEST(Render, LargerBackgroundIsCropped) {
  RasterPage bg(300, 200);
  for (int y = 0; y < 200; ++y)
    for (int x = 0; x < 300; ++x) bg.at(x, y) = static_cast<std::uint8_t>((x + 3 * y) % 256);
  Rng rng(9);
  const PageRealization p = render_page(page(100, 80), PageLayout{}, bg, caveat(), Dictionary("a"), rng);
  ASSERT_EQ(p.image.width(), 100);
  ASSERT_EQ(p.image.height(), 80);
  bool found = false;
  for (int oy = 0; oy <= 120 && !found; ++oy)
    for (int ox = 0; ox <= 200 && !found; ++ox) found = bg.crop(ox, oy, 100, 80) == p.image;
  EXPECT_TRUE(found);
}

TEST(Render, SmallBackgroundAndEmptyDictionaryAreErrors) {
  Rng rng(1);
  EXPECT_THROW(render_page(page(100, 80), PageLayout{}, RasterPage(99, 80), caveat(), Dictionary("a"), rng),
               ParameterError);
  EXPECT_THROW(render_page(page(100, 80), PageLayout{}, RasterPage(100, 80), caveat(), Dictionary("  "), rng),
               ResourceError);
}

TEST(Render, InkStaysInsideTheCell) {
  const Dictionary dict("Giovanni Battista figlio di Pietro e Maria nato in questa parrocchia");
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Box cell{40, 60, 40 + 150 + static_cast<int>(seed) * 5, 60 + 30 + static_cast<int>(seed)};
    PageLayout layout;
    layout.records.push_back(one_cell_record(cell));
    Rng rng(seed);
    const PageRealization p = render_page(page(400, 200), layout, RasterPage(400, 200, 230), caveat(), dict, rng);
    const Box ink = ink_bounds(p.image, 128);
    ASSERT_NE(ink.x1, -1) << seed;
    EXPECT_GE(ink.x0, cell.x0 - 2);
    EXPECT_GE(ink.y0, cell.y0 - 2);
    EXPECT_LE(ink.x1, cell.x1 + 2);
    EXPECT_LE(ink.y1, cell.y1 + 2);
    EXPECT_FALSE(p.records[0].lines[0].cells[0].text.empty());
  }
}

TEST(Render, UnfilledCellsStayBlankAndTextComesFromDictionary) {
  const Dictionary dict("alfa beta gamma");
  PageLayout layout;
  RecordInstance r = one_cell_record({10, 10, 200, 40});
  r.lines[0].cells.push_back({{210, 10, 390, 40}, false, {}});
  layout.records.push_back(r);
  Rng rng(4);
  const PageRealization p = render_page(page(400, 60), layout, RasterPage(400, 60, 240), caveat(), dict, rng);
  const auto& cells = p.records[0].lines[0].cells;
  EXPECT_TRUE(cells[1].text.empty());
  for (int y = 0; y < 60; ++y)
    for (int x = 210; x < 400; ++x) ASSERT_EQ(p.image.at(x, y), 240);
  std::string text = cells[0].text;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find(' ', start);
    if (end == std::string::npos) end = text.size();
    const std::string word = text.substr(start, end - start);
    EXPECT_TRUE(word == "alfa" || word == "beta" || word == "gamma") << word;
    start = end + 1;
  }
}

TEST(Render, InkIntensityWithinTemplateRange) {
  PageTemplate t = page(300, 60);
  t.ink = {40, 45};
  PageLayout layout;
  layout.records.push_back(one_cell_record({10, 10, 290, 50}));
  Rng rng(6);
  const PageRealization p = render_page(t, layout, RasterPage(300, 60, 250), caveat(), Dictionary("parrocchia"), rng);
  std::size_t ink = 0;
  for (auto v : p.image.pixels()) {
    ASSERT_TRUE(v == 250 || (v >= 40 && v <= 45)) << int(v);
    ink += v != 250;
  }
  EXPECT_GT(ink, 0u);
}

TEST(Render, SameStreamSameImage) {
  const Dictionary dict("uno due tre");
  PageLayout layout;
  layout.records.push_back(one_cell_record({10, 10, 200, 40}));
  Rng a(3), b(3);
  const auto pa = render_page(page(220, 60), layout, RasterPage(220, 60), caveat(), dict, a);
  const auto pb = render_page(page(220, 60), layout, RasterPage(220, 60), caveat(), dict, b);
  EXPECT_EQ(pa.image, pb.image);
  EXPECT_EQ(pa.records, pb.records);
}

TEST(Dictionary, SplitsOnWhitespaceAndDecodesUtf8) {
  const Dictionary d("  perch\u00e9\tcitt\u00e0\n l'Adda  ");
  ASSERT_EQ(d.size(), 3u);
  EXPECT_EQ(encode_utf8(d.word(0)), "perch\u00e9");
  EXPECT_EQ(encode_utf8(d.word(1)), "citt\u00e0");
  EXPECT_EQ(encode_utf8(d.word(2)), "l'Adda");
  EXPECT_EQ(decode_utf8("\xff"), std::u32string(1, U'\uFFFD'));
  EXPECT_EQ(decode_utf8("a\xc3"), (std::u32string{U'a', U'\uFFFD'}));
}

TEST(Dictionary, LoadsBundledFilesAndRejectsEmpty) {
  const auto paths = default_resource_paths();
  EXPECT_GT(Dictionary::load("dictionaries/italiano.txt", paths).size(), 300u);
  EXPECT_GT(Dictionary::load("dictionaries/latina.txt", paths).size(), 100u);
  EXPECT_THROW(Dictionary::load("dictionaries/none.txt", paths), ResourceError);
  testing::TempDir dir;
  testing::write_file(dir / "empty.txt", " \n ");
  EXPECT_THROW(Dictionary::load(dir / "empty.txt", paths), ResourceError);
}

}  // namespace
}  // namespace recforge
