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

#include "recforge/layout.hpp"

#include <gtest/gtest.h>

#include <map>

#include "recforge/config.hpp"
#include "recforge/error.hpp"
#include "support.hpp"

namespace recforge {
namespace {

LineSlot fixed_line(int height, std::optional<double> p = std::nullopt) {
  LineSlot slot;
  slot.line.height = {height, height};
  slot.line.cells.push_back({{5, 5}, {50, 50}, 1.0});
  slot.inclusion_probability = p;
  return slot;
}

PageTemplate stack_template(int record_height, int top, int min, int max, double p_cont) {
  PageTemplate t;
  t.page_width = 100;
  t.page_height = max + 10;
  t.corpus_top = top;
  t.min_corpus_height = min;
  t.max_corpus_height = max;
  t.continuation_probability = p_cont;
  t.record.lines.push_back(fixed_line(record_height));
  t.fonts = {"f"};
  t.dictionary.inline_text = "a";
  return t;
}

TEST(SampleRecord, FixedTemplateHasFixedGeometry) {
  RecordTemplate r;
  r.lines = {fixed_line(20), fixed_line(15)};
  Rng rng(1);
  const RecordInstance first = sample_record(r, rng);
  EXPECT_EQ(first.top_y, 0);
  EXPECT_EQ(first.bottom_y, 35);
  ASSERT_EQ(first.lines.size(), 2u);
  EXPECT_EQ(first.lines[1].box, (Box{0, 20, 55, 35}));
  EXPECT_EQ(first.lines[1].cells[0].box, (Box{5, 20, 55, 35}));
  for (int i = 0; i < 100; ++i) EXPECT_EQ(sample_record(r, rng), first);
}

TEST(SampleRecord, OptionalLineFrequency) {
  RecordTemplate r;
  r.lines = {fixed_line(20), fixed_line(10, 0.5)};
  Rng rng(2024);
  int included = 0;
  for (int i = 0; i < 10000; ++i) included += sample_record(r, rng).lines.size() == 2;
  const double f = included / 10000.0;
  EXPECT_GE(f, 0.48);
  EXPECT_LE(f, 0.52);
}

TEST(SampleRecord, ZeroProbabilityLineNeverAppears) {
  RecordTemplate r;
  r.lines = {fixed_line(20), fixed_line(10, 0.0), fixed_line(12, 1.0)};
  Rng rng(3);
  for (int i = 0; i < 1000; ++i) {
    const auto rec = sample_record(r, rng);
    ASSERT_EQ(rec.lines.size(), 2u);
    ASSERT_EQ(rec.height(), 32);
  }
}

TEST(SampleRecord, SampledValuesStayInRanges) {
  RecordTemplate r;
  LineSlot slot;
  slot.line.height = {10, 20};
  slot.line.cells.push_back({{0, 30}, {5, 40}, 0.5});
  r.lines = {slot};
  Rng rng(4);
  int filled = 0;
  for (int i = 0; i < 2000; ++i) {
    const auto rec = sample_record(r, rng);
    const auto& cell = rec.lines[0].cells[0];
    ASSERT_GE(rec.height(), 10);
    ASSERT_LE(rec.height(), 20);
    ASSERT_LE(cell.box.x0, 30);
    ASSERT_GE(cell.box.width(), 5);
    ASSERT_LE(cell.box.width(), 40);
    filled += cell.filled;
  }
  EXPECT_NEAR(filled / 2000.0, 0.5, 0.05);
}

TEST(FillCorpus, ExactStackOfFive) {
  const int h = 40;
  for (double p : {0.0, 0.5, 1.0}) {
    const PageTemplate t = stack_template(h, 100, 100 + 5 * h, 100 + 5 * h, p);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      Rng rng(seed);
      const auto records = fill_corpus(t, rng);
      ASSERT_EQ(records.size(), 5u);
      for (int i = 0; i < 5; ++i) EXPECT_EQ(records[static_cast<std::size_t>(i)].top_y, 100 + i * h);
    }
  }
}

TEST(FillCorpus, CorpusForExactlyOneRecord) {
  const PageTemplate t = stack_template(50, 10, 60, 100, 1.0);
  Rng rng(1);
  EXPECT_EQ(fill_corpus(t, rng).size(), 1u);
}

TEST(FillCorpus, ContinuationProbabilityExtremes) {
  // Records of 10 px, minimum reached after 3, at most 9 fit.
  Rng a(5), b(5);
  EXPECT_EQ(fill_corpus(stack_template(10, 0, 30, 95, 0.0), a).size(), 3u);
  EXPECT_EQ(fill_corpus(stack_template(10, 0, 30, 95, 1.0), b).size(), 9u);
}

TEST(FillCorpus, ContinuationFollowsGeometricLaw) {
  // After the minimum, each extra record needs one success at p = 0.5, and
  // at most 6 fit: P(3 records) = 0.5.
  const PageTemplate t = stack_template(10, 0, 30, 95, 0.5);
  int minimal = 0;
  for (std::uint64_t seed = 0; seed < 4000; ++seed) {
    Rng rng(seed);
    minimal += fill_corpus(t, rng).size() == 3;
  }
  EXPECT_NEAR(minimal / 4000.0, 0.5, 0.04);
}

TEST(FillCorpus, RecordTallerThanAreaIsGenerationError) {
  const PageTemplate t = stack_template(60, 0, 40, 50, 0.5);
  Rng rng(1);
  EXPECT_THROW(fill_corpus(t, rng), GenerationError);
}

TEST(FillCorpus, UnplaceableRecordAfterResamplingIsGenerationError) {
  // The first record always lands at 0..30; the second never fits.
  PageTemplate t = stack_template(30, 0, 31, 40, 0.5);
  Rng rng(1);
  EXPECT_THROW(fill_corpus(t, rng), GenerationError);
}

TEST(FillCorpus, ResamplesRecordsThatCrossMax) {
  PageTemplate t = stack_template(10, 0, 25, 40, 0.0);
  t.record.lines[0].line.height = {10, 30};
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    Rng rng(seed);
    const auto records = fill_corpus(t, rng);
    ASSERT_GE(records.back().bottom_y, 25);
    ASSERT_LE(records.back().bottom_y, 40);
  }
}

TEST(LayoutPage, HeaderIsPlacedAtItsTop) {
  PageTemplate t = stack_template(20, 50, 100, 200, 0.5);
  RecordTemplate header;
  header.lines = {fixed_line(12)};
  t.header = header;
  t.header_top = 7;
  Rng rng(2);
  const PageLayout layout = layout_page(t, rng);
  ASSERT_TRUE(layout.header.has_value());
  EXPECT_EQ(layout.header->top_y, 7);
  EXPECT_EQ(layout.header->bottom_y, 19);
  EXPECT_EQ(layout.records.front().top_y, 50);
}

// Stacking invariants over random valid templates.
TEST(LayoutProperty, StackInvariantsHold) {
  Rng gen(31);
  for (int trial = 0; trial < 200; ++trial) {
    PageTemplate t;
    t.page_width = static_cast<int>(gen.uniform_int(100, 800));
    const int lines = static_cast<int>(gen.uniform_int(1, 4));
    for (int i = 0; i < lines; ++i) {
      LineSlot slot;
      const int lo = static_cast<int>(gen.uniform_int(5, 40));
      slot.line.height = {lo, lo + static_cast<int>(gen.uniform_int(0, 20))};
      slot.line.cells.push_back({{0, 10}, {10, t.page_width - 10}, gen.uniform01()});
      if (i > 0 && gen.bernoulli(0.5)) slot.inclusion_probability = gen.uniform01();
      t.record.lines.push_back(slot);
    }
    t.record.vertical_gap = {0, static_cast<int>(gen.uniform_int(0, 15))};
    t.corpus_top = static_cast<int>(gen.uniform_int(0, 100));
    t.min_corpus_height = t.corpus_top + static_cast<int>(gen.uniform_int(0, 400));
    // Leave room for one more record of any size so placement cannot fail.
    t.max_corpus_height = t.min_corpus_height + t.record.max_height() + t.record.vertical_gap.hi +
                          static_cast<int>(gen.uniform_int(0, 300));
    t.page_height = t.max_corpus_height;
    t.continuation_probability = gen.uniform01();
    t.fonts = {"f"};
    t.dictionary.inline_text = "a";
    ASSERT_TRUE(validate_template(t).empty());

    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      Rng rng(derive_seed(static_cast<std::uint64_t>(trial), seed));
      const auto records = fill_corpus(t, rng);
      if (t.min_corpus_height > t.corpus_top) {
        ASSERT_FALSE(records.empty());
      }
      if (records.empty()) continue;
      int previous = t.corpus_top;
      for (const auto& r : records) {
        ASSERT_GT(r.bottom_y, r.top_y);
        ASSERT_GE(r.top_y, previous);
        ASSERT_GE(r.top_y - previous, records.front().top_y == r.top_y ? 0 : t.record.vertical_gap.lo);
        previous = r.bottom_y;
        for (const auto& line : r.lines) {
          ASSERT_GE(line.box.y0, r.top_y);
          ASSERT_LE(line.box.y1, r.bottom_y);
          for (const auto& cell : line.cells) {
            ASSERT_GE(cell.box.x0, 0);
            ASSERT_LE(cell.box.x1, t.page_width);
          }
        }
      }
      ASSERT_GE(records.back().bottom_y, t.min_corpus_height);
      ASSERT_LE(records.back().bottom_y, t.max_corpus_height);
    }
  }
}

TEST(LayoutProperty, BenchmarkConfigCountsStayInRange) {
  const PageTemplate t = load_config(testing::benchmark_config());
  std::map<std::size_t, int> seen;
  for (std::uint64_t i = 0; i < 10000; ++i) {
    Rng rng(derive_seed(20170101, i));
    ++seen[layout_page(t, rng).records.size()];
  }
  for (const auto& [count, n] : seen) {
    EXPECT_GE(count, 3u);
    EXPECT_LE(count, 9u);
  }
  for (std::size_t c = 3; c <= 9; ++c) EXPECT_GT(seen[c], 0) << c;
}

}  // namespace
}  // namespace recforge
