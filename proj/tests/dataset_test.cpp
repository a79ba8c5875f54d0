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

#include "recforge/dataset.hpp"

#include <gtest/gtest.h>

#include <set>

#include "recforge/config.hpp"
#include "recforge/error.hpp"
#include "recforge/png_io.hpp"
#include "support.hpp"

namespace recforge {
namespace {

using testing::TempDir;

const PageTemplate& small_template() {
  static const PageTemplate t = parse_config(testing::kSmallConfig);
  return t;
}

const SynthesisResources& small_resources() {
  static const SynthesisResources res = SynthesisResources::load(small_template(), default_resource_paths());
  return res;
}

TEST(Synthesize, BlankBackgroundWhenNoneGiven) {
  const auto& res = small_resources();
  ASSERT_EQ(res.backgrounds.size(), 1u);
  EXPECT_EQ(res.backgrounds.source_ids[0], "blank");
  EXPECT_EQ(res.backgrounds.backgrounds[0].width(), 300);
  EXPECT_EQ(res.fonts.size(), 1u);
}

TEST(Synthesize, SameSeedSamePage) {
  const auto a = synthesize_page(small_template(), small_resources(), 42);
  const auto b = synthesize_page(small_template(), small_resources(), 42);
  const auto c = synthesize_page(small_template(), small_resources(), 43);
  EXPECT_EQ(a.image, b.image);
  EXPECT_EQ(a.records, b.records);
  EXPECT_NE(a.image, c.image);
  EXPECT_EQ(a.seed, 42u);
  EXPECT_EQ(a.background_id, "blank");
  EXPECT_EQ(a.font_id, "Caveat-Regular");
}

TEST(Synthesize, RealizationInvariants) {
  const auto& t = small_template();
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto p = synthesize_page(t, small_resources(), seed);
    ASSERT_EQ(p.record_count, static_cast<int>(p.records.size()));
    int prev = t.corpus_top;
    for (const auto& r : p.records) {
      ASSERT_GE(r.top_y, prev);
      prev = r.bottom_y;
    }
    ASSERT_GE(prev, t.min_corpus_height);
    ASSERT_LE(prev, t.max_corpus_height);
  }
}

TEST(Synthesize, PicksAmongBackgroundsAndFonts) {
  PageTemplate t = small_template();
  t.fonts = {"Caveat-Regular", "DancingScript-Regular"};
  PalimpsestSet bgs;
  bgs.backgrounds = {RasterPage(300, 400, 210), RasterPage(320, 420, 190)};
  bgs.source_ids = {"one", "two"};
  const auto res = SynthesisResources::load(t, default_resource_paths(), bgs);
  std::set<std::string> fonts, backgrounds;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto p = synthesize_page(t, res, seed);
    fonts.insert(p.font_id);
    backgrounds.insert(p.background_id);
  }
  EXPECT_EQ(fonts.size(), 2u);
  EXPECT_EQ(backgrounds.size(), 2u);
}

TEST(Dataset, SinglePageWritesOneImageAndRow) {
  TempDir dir;
  const auto s = generate_dataset(small_template(), 1, small_resources(), 7, dir.path());
  ASSERT_EQ(s.entries.size(), 1u);
  EXPECT_EQ(s.entries[0].page_id, "page_000000");
  EXPECT_EQ(s.entries[0].path, "pages/page_000000.png");
  EXPECT_EQ(s.entries[0].seed, derive_seed(7, 0));
  EXPECT_TRUE(std::filesystem::exists(dir / "pages/page_000000.png"));
  const Manifest m = read_manifest(dir / "manifest.jsonl");
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m.entries[0], s.entries[0]);
  const RasterPage img = read_png(m.resolve(m.entries[0]));
  EXPECT_EQ(img, synthesize_page(small_template(), small_resources(), derive_seed(7, 0)).image);
}

TEST(Dataset, LabelsMatchGroundTruthAndBoxes) {
  TempDir dir;
  const auto s = generate_dataset(small_template(), 12, small_resources(), 9, dir.path());
  std::size_t total = 0;
  for (const auto& [count, n] : s.count_histogram) total += n;
  EXPECT_EQ(total, 12u);
  for (const auto& e : s.entries) {
    EXPECT_EQ(e.record_count, static_cast<int>(e.boxes.size()));
    EXPECT_EQ(groundtruth_record_count(dir / "groundtruth" / (e.page_id + ".json")), e.record_count);
  }
}

TEST(Dataset, WorkerCountDoesNotChangeBytes) {
  TempDir a, b;
  DatasetOptions one{1, true}, three{3, true};
  generate_dataset(small_template(), 6, small_resources(), 5, a.path(), one);
  generate_dataset(small_template(), 6, small_resources(), 5, b.path(), three);
  EXPECT_EQ(testing::read_file(a / "manifest.jsonl"), testing::read_file(b / "manifest.jsonl"));
  for (std::size_t i = 0; i < 6; ++i) {
    const std::string page = "pages/" + page_name(i) + ".png";
    EXPECT_EQ(testing::read_file(a / page), testing::read_file(b / page)) << page;
  }
}

TEST(Dataset, ErrorsNameThePage) {
  TempDir dir;
  EXPECT_THROW(generate_dataset(small_template(), 0, small_resources(), 1, dir.path()), ParameterError);
  PalimpsestSet tiny;
  tiny.backgrounds = {RasterPage(10, 10)};
  tiny.source_ids = {"tiny"};
  const auto res = SynthesisResources::load(small_template(), default_resource_paths(), tiny);
  try {
    generate_dataset(small_template(), 3, res, 1, dir.path());
    FAIL();
  } catch (const GenerationError& e) {
    EXPECT_NE(std::string(e.what()).find("page 0 (page_000000)"), std::string::npos) << e.what();
  }
}

}  // namespace
}  // namespace recforge
